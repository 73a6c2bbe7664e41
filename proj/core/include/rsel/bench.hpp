#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rsel::bench {

enum class Strategy { paper, sort_baseline };

std::string_view to_string(Strategy strategy);
Strategy parse_strategy(std::string_view text);

struct BenchRow {
    std::string strategy;
    std::size_t n = 0;
    std::size_t k = 0;
    double preprocess_ns = 0;
    double query_ns = 0;  // median per query
    std::size_t heap_peak = 0;  // max over the query set
    std::size_t rmq_calls = 0;  // max over the query set
    std::size_t space_words = 0;
};

struct BenchReport {
    std::uint64_t seed = 0;
    std::vector<BenchRow> rows;
};

/// Timing knobs. Medians are taken over `repetitions` runs after `warmup` untimed ones.
struct BenchOptions {
    std::uint64_t seed = 20240229;
    std::size_t warmup = 2;
    std::size_t repetitions = 11;
    std::size_t queries = 256;
    /// Upper bound on query range length; 0 means n. Lengths are drawn from [max(k, 1), bound].
    std::size_t max_range = 0;
};

/// Builds the default RMQ structure over random int64 data at each n.
BenchReport bench_preprocess(std::span<const std::size_t> sizes, const BenchOptions& options = {});

/// Times each strategy for each k over the same random array and query ranges.
/// Throws std::invalid_argument if some k exceeds n, and std::logic_error if a
/// paper-strategy query breaks heap_peak <= 2k or rmq_calls <= 2k + 1.
BenchReport bench_query(std::size_t n, std::span<const std::size_t> ks, std::span<const Strategy> strategies,
                        const BenchOptions& options = {});

/// preprocess_ns[t + 1] / preprocess_ns[t] for consecutive rows.
std::vector<double> doubling_ratios(const BenchReport& report);

enum class ReportFormat { table, csv };

ReportFormat parse_report_format(std::string_view text);

inline constexpr std::string_view kCsvHeader = "strategy,n,k,preprocess_ns,query_ns,heap_peak,rmq_calls,space_words";

std::string render_report(const BenchReport& report, ReportFormat format);

}  // namespace rsel::bench
