#pragma once

#include <cassert>
#include <cstddef>
#include <memory>

#include "rsel/block_rmq.hpp"
#include "rsel/errors.hpp"
#include "rsel/sparse_table_rmq.hpp"
#include "rsel/value_sequence.hpp"

namespace rsel {

/// Range-minimum index over a ValueSequence, with 1-based inclusive queries.
///
/// The built tables live behind a shared pointer to immutable state: copies
/// are cheap, concurrent readers need no synchronization, and selection
/// cursors keep the tables alive for as long as they exist.
template <std::totally_ordered T, template <typename> class Index>
class BasicRmq {
public:
    using value_type = T;
    using index_type = Index<T>;

    BasicRmq() : index_(std::make_shared<const Index<T>>()) {}

    explicit BasicRmq(ValueSequence<T> seq) : index_(std::make_shared<const Index<T>>(std::move(seq))) {}

    std::size_t size() const noexcept { return index_->size(); }
    bool empty() const noexcept { return size() == 0; }
    const ValueSequence<T>& sequence() const noexcept { return index_->sequence(); }

    /// Leftmost index of a minimum of A[lo..hi]; throws RangeError unless 1 <= lo <= hi <= n.
    std::size_t query(std::size_t lo, std::size_t hi) const {
        check_range(lo, hi, size());
        return query_unchecked(lo, hi);
    }

    /// As query(), for callers that already validated the range.
    std::size_t query_unchecked(std::size_t lo, std::size_t hi) const noexcept {
        assert(1 <= lo && lo <= hi && hi <= size());
        return index_->argmin(lo - 1, hi - 1) + 1;
    }

    std::size_t space_in_words() const noexcept { return index_->space_in_words(); }

    const Index<T>& index() const noexcept { return *index_; }
    std::shared_ptr<const Index<T>> shared_index() const noexcept { return index_; }

private:
    std::shared_ptr<const Index<T>> index_;
};

#if defined(RSEL_SPARSE_TABLE_RMQ)
template <typename T>
using DefaultRmqIndex = SparseTableRmq<T>;
#else
template <typename T>
using DefaultRmqIndex = BlockRmq<T>;
#endif

template <std::totally_ordered T>
using RmqStructure = BasicRmq<T, DefaultRmqIndex>;

template <std::totally_ordered T>
RmqStructure<T> build_rmq(ValueSequence<T> seq) {
    return RmqStructure<T>(std::move(seq));
}

}  // namespace rsel
