#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "rsel/errors.hpp"
#include "rsel/rmq.hpp"

namespace rsel {

/// query(i, j, k): the k smallest elements of A[i..j], 1-based inclusive.
struct QueryRequest {
    std::size_t i = 1;
    std::size_t j = 1;
    std::size_t k = 0;

    friend bool operator==(const QueryRequest&, const QueryRequest&) = default;
};

template <typename T>
struct SelectedItem {
    T value;
    std::size_t index;  // 1-based position in the original array

    friend bool operator==(const SelectedItem&, const SelectedItem&) = default;
};

/// Instrumentation for one query or cursor.
struct QueryStats {
    std::size_t heap_peak = 0;
    std::size_t rmq_calls = 0;
    std::size_t heap_pushes = 0;
    std::size_t heap_pops = 0;

    friend bool operator==(const QueryStats&, const QueryStats&) = default;
};

template <typename T>
struct QueryResult {
    std::vector<SelectedItem<T>> items;
    QueryStats stats;
};

/// Candidate subinterval [left, right] together with the position and value of
/// its leftmost minimum.
template <typename T>
struct HeapNode {
    std::size_t left;
    std::size_t right;
    std::size_t pos;
    T value;

    friend bool operator==(const HeapNode&, const HeapNode&) = default;
};

/// Binary min-heap of HeapNodes keyed by (value, pos) that records its own
/// push/pop counts and peak size.
template <typename T>
class SelectionHeap {
public:
    void reserve(std::size_t capacity) { nodes_.reserve(capacity); }

    void push(HeapNode<T> node) {
        nodes_.push_back(std::move(node));
        std::push_heap(nodes_.begin(), nodes_.end(), after);
        ++pushes_;
        peak_ = std::max(peak_, nodes_.size());
    }

    HeapNode<T> pop() {
        assert(!nodes_.empty());
        std::pop_heap(nodes_.begin(), nodes_.end(), after);
        HeapNode<T> top = std::move(nodes_.back());
        nodes_.pop_back();
        ++pops_;
        return top;
    }

    const HeapNode<T>& top() const { return nodes_.front(); }
    bool empty() const noexcept { return nodes_.empty(); }
    std::size_t size() const noexcept { return nodes_.size(); }
    std::size_t peak() const noexcept { return peak_; }
    std::size_t pushes() const noexcept { return pushes_; }
    std::size_t pops() const noexcept { return pops_; }

    /// Resident nodes in heap order (unspecified beyond the front being the minimum).
    std::span<const HeapNode<T>> nodes() const noexcept { return nodes_; }

private:
    // std heap algorithms build a max-heap; invert the key for a min-heap.
    static bool after(const HeapNode<T>& a, const HeapNode<T>& b) {
        if (b.value < a.value)
            return true;
        if (a.value < b.value)
            return false;
        return a.pos > b.pos;
    }

    std::vector<HeapNode<T>> nodes_;
    std::size_t peak_ = 0;
    std::size_t pushes_ = 0;
    std::size_t pops_ = 0;
};

/// Heap-of-subintervals selection over one range of an RMQ index.
///
/// Borrowed by reference: the caller keeps `rmq` alive. SelectionCursor wraps
/// this with shared ownership for the lazy interface.
template <typename Rmq>
class SelectionEngine {
public:
    using value_type = typename Rmq::value_type;
    using Node = HeapNode<value_type>;
    using Item = SelectedItem<value_type>;

    explicit SelectionEngine(const Rmq& rmq) : rmq_(&rmq) {}

    /// Seeds the heap with the minimum node of [i, j]. Throws RangeError on an invalid range.
    void seed(std::size_t i, std::size_t j) {
        check_range(i, j, rmq_->size());
        push_range(i, j);
    }

    /// Pops the minimum node and splits it; absent once the range is exhausted.
    std::optional<Item> next() {
        if (heap_.empty())
            return std::nullopt;
        return split_and_push(heap_.pop());
    }

    /// Emits `popped` and pushes the nodes of its non-empty left and right remainders.
    Item split_and_push(const Node& popped) {
        if (popped.left < popped.pos)
            push_range(popped.left, popped.pos - 1);
        if (popped.pos < popped.right)
            push_range(popped.pos + 1, popped.right);
        return Item{popped.value, popped.pos};
    }

    void reserve(std::size_t k) { heap_.reserve(k + 1); }

    const SelectionHeap<value_type>& heap() const noexcept { return heap_; }

    QueryStats stats() const noexcept {
        return QueryStats{heap_.peak(), rmq_calls_, heap_.pushes(), heap_.pops()};
    }

private:
    void push_range(std::size_t lo, std::size_t hi) {
        const std::size_t pos = rmq_->query_unchecked(lo, hi);
        ++rmq_calls_;
        heap_.push(Node{lo, hi, pos, rmq_->sequence().at1(pos)});
    }

    const Rmq* rmq_;
    SelectionHeap<value_type> heap_;
    std::size_t rmq_calls_ = 0;
};

/// Reports the min(k, j - i + 1) smallest elements of A[i..j] in non-decreasing
/// order, each with its 1-based index. k = 0 does no heap or RMQ work.
template <typename Rmq>
QueryResult<typename Rmq::value_type> sorted_select(const Rmq& rmq, const QueryRequest& req) {
    check_range(req.i, req.j, rmq.size());
    QueryResult<typename Rmq::value_type> result;
    const std::size_t count = std::min(req.k, req.j - req.i + 1);
    if (count == 0)
        return result;

    SelectionEngine<Rmq> engine(rmq);
    engine.reserve(count);
    engine.seed(req.i, req.j);
    result.items.reserve(count);
    while (result.items.size() < count)
        result.items.push_back(*engine.next());
    result.stats = engine.stats();
    return result;
}

/// Lazy form of sorted_select: each next_smallest() call yields one more element.
///
/// The cursor shares ownership of the RMQ tables, so it stays valid even if the
/// RmqStructure it was opened on is destroyed first. A single cursor is not
/// safe for concurrent use.
template <typename Rmq>
class SelectionCursor {
public:
    using value_type = typename Rmq::value_type;

    SelectionCursor(const Rmq& rmq, std::size_t i, std::size_t j)
        : rmq_(std::make_unique<Rmq>(rmq)), engine_(*rmq_), i_(i), j_(j) {
        engine_.seed(i, j);
    }

    std::optional<SelectedItem<value_type>> next_smallest() { return engine_.next(); }

    std::size_t i() const noexcept { return i_; }
    std::size_t j() const noexcept { return j_; }
    QueryStats stats() const noexcept { return engine_.stats(); }
    const SelectionEngine<Rmq>& engine() const noexcept { return engine_; }

private:
    std::unique_ptr<Rmq> rmq_;  // stable address for engine_, which points into it
    SelectionEngine<Rmq> engine_;
    std::size_t i_;
    std::size_t j_;
};

template <typename Rmq>
SelectionCursor<Rmq> open_selection(const Rmq& rmq, std::size_t i, std::size_t j) {
    return SelectionCursor<Rmq>(rmq, i, j);
}

}  // namespace rsel
