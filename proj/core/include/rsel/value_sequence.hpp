#pragma once

#include <cmath>
#include <concepts>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "rsel/errors.hpp"

namespace rsel {

/// Immutable array A[1..n] of totally ordered values.
///
/// Copies share the underlying storage, so a sequence can be handed to several
/// indexes (and cursors) without duplicating the data. Floating-point inputs
/// are checked for NaN at construction since NaN breaks the total order every
/// other component relies on.
template <std::totally_ordered T>
class ValueSequence {
public:
    using value_type = T;

    ValueSequence() : values_(std::make_shared<const std::vector<T>>()) {}

    explicit ValueSequence(std::vector<T> values) {
        if constexpr (std::floating_point<T>) {
            for (std::size_t t = 0; t < values.size(); ++t)
                if (std::isnan(values[t]))
                    throw UnorderedValueError(t + 1);
        }
        values_ = std::make_shared<const std::vector<T>>(std::move(values));
    }

    ValueSequence(std::initializer_list<T> values) : ValueSequence(std::vector<T>(values)) {}

    std::size_t size() const noexcept { return values_->size(); }
    bool empty() const noexcept { return values_->empty(); }

    /// 1-based element access, unchecked.
    const T& at1(std::size_t index) const noexcept { return (*values_)[index - 1]; }

    /// 0-based element access, unchecked.
    const T& operator[](std::size_t offset) const noexcept { return (*values_)[offset]; }

    std::span<const T> values() const noexcept { return *values_; }

    friend bool operator==(const ValueSequence& a, const ValueSequence& b) {
        return a.values_ == b.values_ || *a.values_ == *b.values_;
    }

private:
    std::shared_ptr<const std::vector<T>> values_;
};

}  // namespace rsel
