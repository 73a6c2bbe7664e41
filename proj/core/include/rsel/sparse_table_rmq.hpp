#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "rsel/value_sequence.hpp"

namespace rsel {

/// Plain sparse table over every position: O(n log n) words, O(1) query.
///
/// Debugging baseline only. It does not meet the linear-space bound that
/// BlockRmq provides; select it with RSEL_SPARSE_TABLE_RMQ=ON or use it
/// directly in tests.
template <std::totally_ordered T>
class SparseTableRmq {
public:
    static constexpr const char* name = "sparse_table";

    SparseTableRmq() = default;

    explicit SparseTableRmq(ValueSequence<T> seq) : seq_(std::move(seq)) {
        const std::size_t n = seq_.size();
        if (n == 0)
            return;
        levels_ = static_cast<std::size_t>(std::bit_width(n));
        table_.resize(levels_ * n);
        for (std::size_t t = 0; t < n; ++t)
            table_[t] = t;
        for (std::size_t level = 1; level < levels_; ++level) {
            const std::size_t half = std::size_t{1} << (level - 1);
            const std::size_t* prev = &table_[(level - 1) * n];
            std::size_t* cur = &table_[level * n];
            for (std::size_t t = 0; t + 2 * half <= n; ++t)
                cur[t] = leftmost(prev[t], prev[t + half]);
        }
    }

    std::size_t size() const noexcept { return seq_.size(); }
    const ValueSequence<T>& sequence() const noexcept { return seq_; }

    /// Leftmost position of a minimum in [lo, hi], 0-based inclusive. Unchecked.
    std::size_t argmin(std::size_t lo, std::size_t hi) const noexcept {
        assert(lo <= hi && hi < size());
        const std::size_t level = static_cast<std::size_t>(std::bit_width(hi - lo + 1)) - 1;
        const std::size_t* row = &table_[level * size()];
        return leftmost(row[lo], row[hi + 1 - (std::size_t{1} << level)]);
    }

    std::size_t space_in_words() const noexcept {
        return (table_.size() * sizeof(std::size_t) + sizeof(std::uint64_t) - 1) / sizeof(std::uint64_t) + 1;
    }

private:
    // a lies left of b; ties keep a.
    std::size_t leftmost(std::size_t a, std::size_t b) const noexcept { return seq_[b] < seq_[a] ? b : a; }

    ValueSequence<T> seq_;
    std::size_t levels_ = 0;
    std::vector<std::size_t> table_;
};

}  // namespace rsel
