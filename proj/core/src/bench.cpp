#include "rsel/bench.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "rsel/oracle.hpp"
#include "rsel/rmq.hpp"
#include "rsel/select.hpp"

namespace rsel::bench {

namespace {

using Clock = std::chrono::steady_clock;

// Keeps timed work observable to the optimizer.
volatile std::size_t g_sink = 0;

template <typename F>
double median_ns(const BenchOptions& options, F&& run) {
    for (std::size_t w = 0; w < options.warmup; ++w)
        run();
    std::vector<double> samples;
    samples.reserve(std::max<std::size_t>(options.repetitions, 1));
    for (std::size_t r = 0; r < std::max<std::size_t>(options.repetitions, 1); ++r) {
        const auto start = Clock::now();
        run();
        const auto stop = Clock::now();
        samples.push_back(std::chrono::duration<double, std::nano>(stop - start).count());
    }
    std::nth_element(samples.begin(), samples.begin() + samples.size() / 2, samples.end());
    return samples[samples.size() / 2];
}

ValueSequence<std::int64_t> random_sequence(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> dist(-1'000'000'000, 1'000'000'000);
    std::vector<std::int64_t> values(n);
    for (auto& v : values)
        v = dist(rng);
    return ValueSequence<std::int64_t>(std::move(values));
}

std::vector<QueryRequest> random_queries(std::size_t n, std::size_t k, const BenchOptions& options) {
    std::mt19937_64 rng(options.seed ^ (0x9e3779b97f4a7c15ULL * (k + 1)));
    const std::size_t min_len = std::max<std::size_t>(k, 1);
    const std::size_t max_len = options.max_range == 0 ? n : std::clamp(options.max_range, min_len, n);
    std::uniform_int_distribution<std::size_t> len_dist(min_len, max_len);
    std::vector<QueryRequest> queries(std::max<std::size_t>(options.queries, 1));
    for (auto& q : queries) {
        const std::size_t len = len_dist(rng);
        std::uniform_int_distribution<std::size_t> start_dist(1, n - len + 1);
        q.i = start_dist(rng);
        q.j = q.i + len - 1;
        q.k = k;
    }
    return queries;
}

std::string format_ns(double ns) {
    return std::to_string(static_cast<long long>(std::llround(ns)));
}

}  // namespace

std::string_view to_string(Strategy strategy) {
    return strategy == Strategy::paper ? "paper" : "sort_baseline";
}

Strategy parse_strategy(std::string_view text) {
    if (text == "paper")
        return Strategy::paper;
    if (text == "sort_baseline")
        return Strategy::sort_baseline;
    throw std::invalid_argument("unknown strategy '" + std::string(text) + "' (expected paper or sort_baseline)");
}

ReportFormat parse_report_format(std::string_view text) {
    if (text == "table")
        return ReportFormat::table;
    if (text == "csv")
        return ReportFormat::csv;
    throw std::invalid_argument("unknown report format '" + std::string(text) + "' (expected table or csv)");
}

BenchReport bench_preprocess(std::span<const std::size_t> sizes, const BenchOptions& options) {
    BenchReport report{options.seed, {}};
    for (const std::size_t n : sizes) {
        const auto seq = random_sequence(n, options.seed + n);
        std::size_t space = 0;
        const double ns = median_ns(options, [&] {
            const auto rmq = build_rmq(seq);
            space = rmq.space_in_words();
            g_sink = g_sink + rmq.size();
        });
        report.rows.push_back(BenchRow{"paper", n, 0, ns, 0, 0, 0, space});
    }
    return report;
}

BenchReport bench_query(std::size_t n, std::span<const std::size_t> ks, std::span<const Strategy> strategies,
                        const BenchOptions& options) {
    for (const std::size_t k : ks)
        if (k > n)
            throw std::invalid_argument("k=" + std::to_string(k) + " exceeds n=" + std::to_string(n));
    BenchReport report{options.seed, {}};
    if (ks.empty() || strategies.empty())
        return report;
    if (n == 0)
        throw std::invalid_argument("bench query needs n >= 1");

    const auto seq = random_sequence(n, options.seed + n);
    const auto build_start = Clock::now();
    const auto rmq = build_rmq(seq);
    const double build_ns = std::chrono::duration<double, std::nano>(Clock::now() - build_start).count();

    for (const std::size_t k : ks) {
        const auto queries = random_queries(n, k, options);
        for (const Strategy strategy : strategies) {
            BenchRow row{std::string(to_string(strategy)), n, k, 0, 0, 0, 0, 0};
            double total = 0;
            if (strategy == Strategy::paper) {
                row.preprocess_ns = build_ns;
                row.space_words = rmq.space_in_words();
                for (const auto& q : queries) {
                    const auto result = sorted_select(rmq, q);
                    const auto& s = result.stats;
                    if (k >= 1 && (s.heap_peak > 2 * k || s.rmq_calls > 2 * k + 1))
                        throw std::logic_error("heap bound violated at n=" + std::to_string(n) +
                                               " k=" + std::to_string(k));
                    if (s.heap_pops != result.items.size())
                        throw std::logic_error("heap_pops differs from emitted count");
                    row.heap_peak = std::max(row.heap_peak, s.heap_peak);
                    row.rmq_calls = std::max(row.rmq_calls, s.rmq_calls);
                }
                total = median_ns(options, [&] {
                    std::size_t acc = 0;
                    for (const auto& q : queries)
                        acc += sorted_select(rmq, q).items.size();
                    g_sink = g_sink + acc;
                });
            } else {
                total = median_ns(options, [&] {
                    std::size_t acc = 0;
                    for (const auto& q : queries)
                        acc += oracle::oracle_select(seq, q).items.size();
                    g_sink = g_sink + acc;
                });
            }
            row.query_ns = total / static_cast<double>(queries.size());
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

std::vector<double> doubling_ratios(const BenchReport& report) {
    std::vector<double> ratios;
    for (std::size_t t = 1; t < report.rows.size(); ++t) {
        const double prev = report.rows[t - 1].preprocess_ns;
        ratios.push_back(prev > 0 ? report.rows[t].preprocess_ns / prev : 0.0);
    }
    return ratios;
}

std::string render_report(const BenchReport& report, ReportFormat format) {
    std::vector<std::array<std::string, 8>> cells;
    for (const auto& r : report.rows)
        cells.push_back({r.strategy, std::to_string(r.n), std::to_string(r.k), format_ns(r.preprocess_ns),
                         format_ns(r.query_ns), std::to_string(r.heap_peak), std::to_string(r.rmq_calls),
                         std::to_string(r.space_words)});

    std::ostringstream out;
    if (format == ReportFormat::csv) {
        out << kCsvHeader << '\n';
        for (const auto& row : cells) {
            for (std::size_t c = 0; c < row.size(); ++c)
                out << (c ? "," : "") << row[c];
            out << '\n';
        }
        return out.str();
    }

    const std::array<std::string, 8> header{"strategy",  "n",         "k",         "preprocess_ns",
                                            "query_ns", "heap_peak", "rmq_calls", "space_words"};
    std::array<std::size_t, 8> width{};
    for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
        for (const auto& row : cells)
            width[c] = std::max(width[c], row[c].size());
    }
    auto emit = [&](const std::array<std::string, 8>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c)
                out << "  ";
            // Strategy names left-aligned, numbers right-aligned.
            if (c == 0)
                out << row[c] << std::string(width[c] - row[c].size(), ' ');
            else
                out << std::string(width[c] - row[c].size(), ' ') << row[c];
        }
        out << '\n';
    };
    out << "# seed " << report.seed << '\n';
    emit(header);
    for (const auto& row : cells)
        emit(row);
    return out.str();
}

}  // namespace rsel::bench
