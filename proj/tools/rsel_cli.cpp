#include "rsel_cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string_view>
#include <variant>

#include "rsel/bench.hpp"
#include "rsel/dataset.hpp"
#include "rsel/oracle.hpp"
#include "rsel/rmq.hpp"
#include "rsel/select.hpp"

namespace rsel::cli {

namespace {

enum class OutputFormat { csv, jsonlines };

struct DataSource {
    std::string dataset_path;
    std::string input_path;
    std::string kind = "int64";
    bool binary = false;
};

struct QueryOptions {
    DataSource source;
    std::vector<std::size_t> positional;
    std::optional<std::size_t> i;
    std::optional<std::size_t> j;
    std::optional<std::size_t> k;
    std::string batch_path;
    std::string format = "csv";
    bool verify = false;
};

/// Thrown for batch-file problems; carries the exit code and a line-numbered message.
struct BatchError {
    int code;
    std::string message;
};

struct UsageError {
    std::string message;
};

template <typename T>
void render_value(std::ostream& out, T value) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    out.write(buf, end - buf);
}

template <typename T>
void render_items(std::ostream& out, const std::vector<SelectedItem<T>>& items, OutputFormat format) {
    for (const auto& item : items) {
        if (format == OutputFormat::csv) {
            render_value(out, item.value);
            out << ',' << item.index << '\n';
        } else {
            out << "{\"value\": ";
            render_value(out, item.value);
            out << ", \"index\": " << item.index << "}\n";
        }
    }
}

Dataset load_source(const DataSource& source, std::ostream& err) {
    if (!source.dataset_path.empty() && !source.input_path.empty())
        throw UsageError{"use either --dataset or --input, not both"};
    if (!source.dataset_path.empty())
        return load_dataset(source.dataset_path);
    if (source.input_path.empty())
        throw UsageError{"a dataset is required: pass --dataset PATH or --input PATH"};
    auto ingested = ingest(source.input_path, parse_element_kind(source.kind), source.binary);
    for (const auto& w : ingested.warnings)
        err << "warning: " << w << '\n';
    return std::move(ingested.dataset);
}

QueryRequest single_request(const QueryOptions& q) {
    if (!q.positional.empty()) {
        if (q.positional.size() != 3)
            throw UsageError{"expected three positional values: i j k"};
        if (q.i || q.j || q.k)
            throw UsageError{"give i j k either positionally or with -i/-j/-k, not both"};
        return {q.positional[0], q.positional[1], q.positional[2]};
    }
    if (!q.i || !q.j || !q.k)
        throw UsageError{"query needs i, j and k"};
    return {*q.i, *q.j, *q.k};
}

struct BatchLine {
    std::size_t line;
    QueryRequest req;
};

std::vector<BatchLine> parse_batch(std::string_view text) {
    std::vector<BatchLine> lines;
    std::size_t line = 0;
    while (!text.empty()) {
        ++line;
        const std::size_t nl = text.find('\n');
        std::string_view raw = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

        std::vector<std::size_t> fields;
        std::size_t pos = 0;
        bool bad = false;
        while (pos < raw.size()) {
            while (pos < raw.size() && std::isspace(static_cast<unsigned char>(raw[pos])))
                ++pos;
            if (pos == raw.size())
                break;
            std::size_t value = 0;
            const auto [end, ec] = std::from_chars(raw.data() + pos, raw.data() + raw.size(), value);
            const std::size_t used = static_cast<std::size_t>(end - raw.data());
            if (ec != std::errc{} || (used < raw.size() && !std::isspace(static_cast<unsigned char>(raw[used])))) {
                bad = true;
                break;
            }
            fields.push_back(value);
            pos = used;
        }
        if (!bad && fields.empty())
            continue;  // blank line
        if (bad || fields.size() != 3)
            throw BatchError{kParseError, "batch line " + std::to_string(line) +
                                              ": expected three non-negative integers \"i j k\""};
        lines.push_back({line, {fields[0], fields[1], fields[2]}});
    }
    return lines;
}

void warn_if_clamped(const QueryRequest& req, std::ostream& err, std::optional<std::size_t> line = {}) {
    const std::size_t range = req.j - req.i + 1;
    if (req.k > range) {
        err << "warning: ";
        if (line)
            err << "batch line " << *line << ": ";
        err << "k=" << req.k << " exceeds range size " << range << "; returning " << range << " elements\n";
    }
}

template <typename T>
int run_queries(const ValueSequence<T>& seq, const std::vector<BatchLine>& queries, bool batch, const QueryOptions& q,
                std::ostream& out, std::ostream& err) {
    const OutputFormat format = q.format == "jsonlines" ? OutputFormat::jsonlines : OutputFormat::csv;
    for (const auto& [line, req] : queries) {
        try {
            check_range(req.i, req.j, seq.size());
        } catch (const RangeError& e) {
            if (batch)
                throw BatchError{kRangeError, "batch line " + std::to_string(line) + ": " + e.what()};
            throw;
        }
    }

    // Built once, shared by every query in the batch.
    const RmqStructure<T> rmq(seq);
    for (const auto& [line, req] : queries) {
        warn_if_clamped(req, err, batch ? std::optional(line) : std::nullopt);
        const auto result = sorted_select(rmq, req);
        if (q.verify) {
            const std::string problem = oracle::check_against_oracle(seq, req, result.items);
            if (!problem.empty()) {
                err << "error: verification failed for query " << req.i << ' ' << req.j << ' ' << req.k;
                if (batch)
                    err << " (batch line " << line << ")";
                err << ": " << problem << '\n';
                return kVerifyMismatch;
            }
        }
        if (batch)
            out << "# query " << req.i << ' ' << req.j << ' ' << req.k << '\n';
        render_items(out, result.items, format);
    }
    if (q.verify)
        err << "verified " << queries.size() << " quer" << (queries.size() == 1 ? "y" : "ies") << " against the oracle\n";
    return kOk;
}

int execute_queries(const QueryOptions& q, bool batch, std::ostream& out, std::ostream& err) {
    std::vector<BatchLine> queries;
    if (batch)
        queries = parse_batch(read_file(q.batch_path));
    else
        queries.push_back({1, single_request(q)});
    const Dataset dataset = load_source(q.source, err);
    return std::visit([&](const auto& seq) { return run_queries(seq, queries, batch, q, out, err); }, dataset.seq);
}

std::size_t parse_size(const std::string& text) {
    const auto caret = text.find('^');
    std::size_t value = 0;
    if (caret != std::string::npos) {
        std::size_t base = 0, exponent = 0;
        const auto r1 = std::from_chars(text.data(), text.data() + caret, base);
        const auto r2 = std::from_chars(text.data() + caret + 1, text.data() + text.size(), exponent);
        if (r1.ec != std::errc{} || r1.ptr != text.data() + caret || r2.ec != std::errc{} ||
            r2.ptr != text.data() + text.size() || exponent >= 63)
            throw UsageError{"bad size '" + text + "'"};
        value = 1;
        for (std::size_t e = 0; e < exponent; ++e)
            value *= base;
        return value;
    }
    const auto r = std::from_chars(text.data(), text.data() + text.size(), value);
    if (r.ec != std::errc{} || r.ptr != text.data() + text.size())
        throw UsageError{"bad size '" + text + "'"};
    return value;
}

std::vector<std::size_t> parse_sizes(const std::vector<std::string>& texts) {
    std::vector<std::size_t> sizes;
    for (const auto& t : texts)
        sizes.push_back(parse_size(t));
    return sizes;
}

void add_source_options(CLI::App* cmd, DataSource& source) {
    cmd->add_option("--dataset", source.dataset_path, "Persisted dataset (.rsel) to query");
    cmd->add_option("--input", source.input_path, "Raw input to ingest on the fly instead of --dataset");
    cmd->add_option("--kind", source.kind, "Element kind of --input")->check(CLI::IsMember({"int64", "float64"}));
    cmd->add_flag("--binary", source.binary, "--input holds 8-byte little-endian values instead of text");
}

void add_query_options(CLI::App* cmd, QueryOptions& q) {
    add_source_options(cmd, q.source);
    cmd->add_option("-i", q.i, "First index of the range (1-based, inclusive)");
    cmd->add_option("-j", q.j, "Last index of the range (1-based, inclusive)");
    cmd->add_option("-k", q.k, "Number of smallest elements to report");
    cmd->add_option("--format", q.format, "Output format")->check(CLI::IsMember({"csv", "jsonlines"}));
    cmd->add_flag("--verify", q.verify, "Cross-check every answer against the brute-force oracle");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sorted range selection: report the k smallest elements of A[i..j] in non-decreasing order.\n"
                 "All indices are 1-based and inclusive (1 <= i <= j <= n)."};
    app.name("rsel");
    app.require_subcommand(1);

    DataSource ingest_source;
    std::string ingest_out;
    auto* ingest_cmd = app.add_subcommand("ingest", "Parse raw values and save them as a dataset file");
    ingest_cmd->add_option("--input", ingest_source.input_path, "Input file: one value per line, or raw with --binary")
        ->required();
    ingest_cmd->add_option("--kind", ingest_source.kind, "Element kind")->check(CLI::IsMember({"int64", "float64"}));
    ingest_cmd->add_flag("--binary", ingest_source.binary, "Input holds 8-byte little-endian values");
    ingest_cmd->add_option("--dataset", ingest_out, "Output dataset file")->required();

    QueryOptions query_opts;
    auto* query_cmd = app.add_subcommand("query", "Run one query (i, j, k)");
    query_cmd->add_option("ijk", query_opts.positional, "i j k, as an alternative to -i/-j/-k")->expected(3);
    add_query_options(query_cmd, query_opts);

    QueryOptions batch_opts;
    auto* batch_cmd = app.add_subcommand("batch", "Run every \"i j k\" line of a query file in order");
    batch_cmd->add_option("queries", batch_opts.batch_path, "Batch file, three integers per line")->required();
    add_query_options(batch_cmd, batch_opts);

    QueryOptions verify_opts;
    std::vector<std::string> verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "Like query (i j k) or batch (FILE), always checked against the oracle");
    verify_cmd->add_option("args", verify_args, "Either i j k or a batch file")->expected(0, 3);
    add_query_options(verify_cmd, verify_opts);

    auto* bench_cmd = app.add_subcommand("bench", "Instrumented benchmarks");
    bench_cmd->require_subcommand(1);
    bench::BenchOptions bench_opts;
    std::string bench_format = "table";
    auto add_bench_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", bench_format, "Report format")->check(CLI::IsMember({"table", "csv"}));
        cmd->add_option("--seed", bench_opts.seed, "Random seed");
        cmd->add_option("--reps", bench_opts.repetitions, "Timed repetitions (median is reported)");
        cmd->add_option("--warmup", bench_opts.warmup, "Untimed warm-up runs");
    };
    std::vector<std::string> size_texts;
    auto* pre_cmd = bench_cmd->add_subcommand("preprocess", "Time RMQ construction at each n");
    pre_cmd->add_option("--sizes", size_texts, "Array sizes, e.g. 65536,2^17")->delimiter(',')->required();
    add_bench_common(pre_cmd);

    std::string n_text;
    std::vector<std::string> k_texts;
    std::vector<std::string> strategy_texts{"paper", "sort_baseline"};
    auto* bq_cmd = bench_cmd->add_subcommand("query", "Time queries at fixed n for each k");
    bq_cmd->add_option("--n", n_text, "Array size")->required();
    bq_cmd->add_option("--ks", k_texts, "Values of k")->delimiter(',')->required();
    bq_cmd->add_option("--strategies", strategy_texts, "paper and/or sort_baseline")->delimiter(',');
    bq_cmd->add_option("--queries", bench_opts.queries, "Random ranges per k");
    bq_cmd->add_option("--max-range", bench_opts.max_range, "Longest query range (0 = n)");
    add_bench_common(bq_cmd);

    std::vector<const char*> argv{"rsel"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsageError;
    }

    try {
        if (*ingest_cmd) {
            auto ingested = ingest(ingest_source.input_path, parse_element_kind(ingest_source.kind), ingest_source.binary);
            for (const auto& w : ingested.warnings)
                err << "warning: " << w << '\n';
            save_dataset(ingested.dataset, ingest_out);
            out << "ingested " << ingested.dataset.size() << ' ' << to_string(ingested.dataset.kind) << " values into "
                << ingest_out << '\n';
            return kOk;
        }
        if (*query_cmd)
            return execute_queries(query_opts, false, out, err);
        if (*batch_cmd)
            return execute_queries(batch_opts, true, out, err);
        if (*verify_cmd) {
            verify_opts.verify = true;
            if (verify_args.size() == 1) {
                verify_opts.batch_path = verify_args[0];
                return execute_queries(verify_opts, true, out, err);
            }
            for (const auto& a : verify_args)
                verify_opts.positional.push_back(parse_size(a));
            return execute_queries(verify_opts, false, out, err);
        }
        if (*pre_cmd) {
            const auto report = bench::bench_preprocess(parse_sizes(size_texts), bench_opts);
            const auto format = bench::parse_report_format(bench_format);
            out << bench::render_report(report, format);
            if (format == bench::ReportFormat::csv)
                err << "# seed " << report.seed << '\n';
            const auto ratios = bench::doubling_ratios(report);
            for (std::size_t t = 0; t < ratios.size(); ++t)
                err << "# time ratio n=" << report.rows[t + 1].n << " / n=" << report.rows[t].n << ": " << ratios[t]
                    << '\n';
            return kOk;
        }
        if (*bq_cmd) {
            std::vector<bench::Strategy> strategies;
            for (const auto& s : strategy_texts)
                strategies.push_back(bench::parse_strategy(s));
            const auto report = bench::bench_query(parse_size(n_text), parse_sizes(k_texts), strategies, bench_opts);
            const auto format = bench::parse_report_format(bench_format);
            out << bench::render_report(report, format);
            if (format == bench::ReportFormat::csv)
                err << "# seed " << report.seed << '\n';
            return kOk;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.message << '\n';
        return kUsageError;
    } catch (const BatchError& e) {
        err << "error: " << e.message << '\n';
        return e.code;
    } catch (const RangeError& e) {
        err << "error: " << e.what() << '\n';
        return kRangeError;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    } catch (const BadMagicError& e) {
        err << "error: " << e.what() << '\n';
        return kBadMagic;
    } catch (const UnsupportedVersionError& e) {
        err << "error: " << e.what() << '\n';
        return kUnsupportedVersion;
    } catch (const TruncatedDatasetError& e) {
        err << "error: " << e.what() << '\n';
        return kTruncated;
    } catch (const DatasetFormatError& e) {
        err << "error: " << e.what() << '\n';
        return kFormatError;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    }
    return kUsageError;
}

}  // namespace rsel::cli
