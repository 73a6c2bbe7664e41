#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "rsel/errors.hpp"
#include "rsel/select.hpp"
#include "rsel/value_sequence.hpp"

// Brute-force references. These deliberately share nothing with the RMQ
// tables or the selection heap.
namespace rsel::oracle {

/// Leftmost minimum index of A[lo..hi] by linear scan.
template <typename T>
std::size_t oracle_rmq(const ValueSequence<T>& seq, std::size_t lo, std::size_t hi) {
    check_range(lo, hi, seq.size());
    std::size_t best = lo;
    for (std::size_t t = lo + 1; t <= hi; ++t)
        if (seq.at1(t) < seq.at1(best))
            best = t;
    return best;
}

/// Copies A[i..j] with indices, sorts by (value, index), keeps the first min(k, j - i + 1).
template <typename T>
QueryResult<T> oracle_select(const ValueSequence<T>& seq, const QueryRequest& req) {
    check_range(req.i, req.j, seq.size());
    std::vector<SelectedItem<T>> all;
    all.reserve(req.j - req.i + 1);
    for (std::size_t t = req.i; t <= req.j; ++t)
        all.push_back({seq.at1(t), t});
    std::sort(all.begin(), all.end(), [](const SelectedItem<T>& a, const SelectedItem<T>& b) {
        if (a.value < b.value)
            return true;
        if (b.value < a.value)
            return false;
        return a.index < b.index;
    });
    all.resize(std::min(req.k, all.size()));
    return QueryResult<T>{std::move(all), QueryStats{}};
}

/// Why an engine answer disagrees with the oracle, or empty when it agrees.
///
/// Values must match the oracle's value sequence exactly; indices need only be
/// distinct, inside [i, j], and point at their value, since the order of equal
/// values is not part of the contract.
template <typename T>
std::string check_against_oracle(const ValueSequence<T>& seq, const QueryRequest& req,
                                 const std::vector<SelectedItem<T>>& items) {
    const QueryResult<T> expected = oracle_select(seq, req);
    if (items.size() != expected.items.size())
        return "length " + std::to_string(items.size()) + " != expected " + std::to_string(expected.items.size());
    std::vector<std::size_t> seen;
    seen.reserve(items.size());
    for (std::size_t t = 0; t < items.size(); ++t) {
        const auto& item = items[t];
        if (item.value < expected.items[t].value || expected.items[t].value < item.value)
            return "value mismatch at rank " + std::to_string(t + 1);
        if (item.index < req.i || item.index > req.j)
            return "index " + std::to_string(item.index) + " outside the query range";
        if (seq.at1(item.index) < item.value || item.value < seq.at1(item.index))
            return "index " + std::to_string(item.index) + " does not hold the reported value";
        seen.push_back(item.index);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        return "duplicate index in result";
    return {};
}

}  // namespace rsel::oracle
