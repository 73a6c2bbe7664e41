#include <benchmark/benchmark.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "rsel/block_rmq.hpp"
#include "rsel/rmq.hpp"
#include "rsel/select.hpp"
#include "rsel/sparse_table_rmq.hpp"

namespace {

using namespace rsel;

ValueSequence<std::int64_t> random_sequence(std::size_t n) {
    std::mt19937_64 rng(20240229);
    std::vector<std::int64_t> values(n);
    for (auto& v : values)
        v = static_cast<std::int64_t>(rng() >> 1);
    return ValueSequence<std::int64_t>(std::move(values));
}

std::vector<QueryRequest> random_requests(std::size_t n, std::size_t k, std::size_t count) {
    std::mt19937_64 rng(7);
    std::vector<QueryRequest> out;
    while (out.size() < count) {
        std::size_t i = 1 + rng() % n, j = 1 + rng() % n;
        if (i > j)
            std::swap(i, j);
        if (j - i + 1 >= k)
            out.push_back({i, j, k});
    }
    return out;
}

template <template <typename> class Index>
void BM_Build(benchmark::State& state) {
    const auto seq = random_sequence(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        BasicRmq<std::int64_t, Index> rmq(seq);
        benchmark::DoNotOptimize(rmq.space_in_words());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Build<BlockRmq>)->Name("BM_BuildBlockRmq")->RangeMultiplier(4)->Range(1 << 10, 1 << 22)
    ->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Build<SparseTableRmq>)->Name("BM_BuildSparseTable")->RangeMultiplier(4)->Range(1 << 10, 1 << 22)
    ->Unit(benchmark::kMicrosecond);

template <template <typename> class Index>
void BM_Query(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const BasicRmq<std::int64_t, Index> rmq(random_sequence(n));
    const auto requests = random_requests(n, 1, 4096);
    std::size_t t = 0;
    for (auto _ : state) {
        const auto& r = requests[t++ & 4095];
        benchmark::DoNotOptimize(rmq.query_unchecked(r.i, r.j));
    }
}
BENCHMARK(BM_Query<BlockRmq>)->Name("BM_RmqQueryBlock")->RangeMultiplier(16)->Range(1 << 10, 1 << 22);
BENCHMARK(BM_Query<SparseTableRmq>)->Name("BM_RmqQuerySparseTable")->RangeMultiplier(16)->Range(1 << 10, 1 << 22);

constexpr std::size_t kSelectN = std::size_t{1} << 20;

void BM_SortedSelect(benchmark::State& state) {
    const std::size_t k = static_cast<std::size_t>(state.range(0));
    const auto rmq = build_rmq(random_sequence(kSelectN));
    const auto requests = random_requests(kSelectN, k, 256);
    std::size_t t = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(sorted_select(rmq, requests[t++ & 255]).items.data());
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SortedSelect)->RangeMultiplier(4)->Range(1, 4096)->Unit(benchmark::kMicrosecond);

// Copy the range and partially sort it: the obvious alternative without preprocessing.
void BM_SortBaseline(benchmark::State& state) {
    const std::size_t k = static_cast<std::size_t>(state.range(0));
    const auto seq = random_sequence(kSelectN);
    const auto requests = random_requests(kSelectN, k, 256);
    std::vector<std::int64_t> scratch;
    std::size_t t = 0;
    for (auto _ : state) {
        const auto& r = requests[t++ & 255];
        const auto values = seq.values();
        scratch.assign(values.begin() + static_cast<std::ptrdiff_t>(r.i - 1),
                       values.begin() + static_cast<std::ptrdiff_t>(r.j));
        std::partial_sort(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(k), scratch.end());
        benchmark::DoNotOptimize(scratch.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SortBaseline)->RangeMultiplier(4)->Range(1, 4096)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
