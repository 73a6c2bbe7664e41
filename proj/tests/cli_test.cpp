#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "rsel/dataset.hpp"
#include "rsel_cli.hpp"

namespace rsel::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("rsel_cli_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& content) {
        const fs::path p = dir_ / name;
        std::ofstream(p, std::ios::binary) << content;
        return p.string();
    }

    static Outcome cli(std::vector<std::string> args) {
        std::ostringstream out, err;
        const int code = run(args, out, err);
        return {code, out.str(), err.str()};
    }

    fs::path dir_;
};

TEST_F(CliTest, QueryCsvExample) {
    const auto input = write("a.txt", "3\n1\n4\n1\n5\n9\n2\n6\n");
    const auto r = cli({"query", "--input", input, "2", "7", "3", "--format", "csv"});
    EXPECT_EQ(r.code, kOk);
    EXPECT_EQ(r.out, "1,2\n1,4\n2,7\n");
}

TEST_F(CliTest, QueryFlagsAndJsonLines) {
    const auto input = write("a.txt", "3\n1\n4\n1\n5\n9\n2\n6\n");
    const auto r = cli({"query", "--input", input, "-i", "2", "-j", "7", "-k", "2", "--format", "jsonlines"});
    EXPECT_EQ(r.code, kOk);
    EXPECT_EQ(r.out, "{\"value\": 1, \"index\": 2}\n{\"value\": 1, \"index\": 4}\n");
}

TEST_F(CliTest, FloatValuesRenderShortest) {
    const auto input = write("f.txt", "0.1\n-2.5\n1e300\n");
    const auto r = cli({"query", "--input", input, "--kind", "float64", "1", "3", "3"});
    EXPECT_EQ(r.code, kOk);
    EXPECT_EQ(r.out, "-2.5,2\n0.1,1\n1e+300,3\n");
}

TEST_F(CliTest, InvertedRangeIsARangeError) {
    const auto input = write("a.txt", "3\n1\n4\n1\n5\n");
    const auto r = cli({"query", "--input", input, "5", "2", "1"});
    EXPECT_EQ(r.code, kRangeError);
    EXPECT_TRUE(r.out.empty());
    EXPECT_NE(r.err.find("i=5 > j=2"), std::string::npos);
    EXPECT_EQ(cli({"query", "--input", input, "1", "6", "1"}).code, kRangeError);
}

TEST_F(CliTest, ClampWarnsOnDiagnosticStream) {
    const auto input = write("b.txt", "7\n8\n");
    const auto r = cli({"query", "--input", input, "1", "2", "9"});
    EXPECT_EQ(r.code, kOk);
    EXPECT_EQ(r.out, "7,1\n8,2\n");
    EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST_F(CliTest, BatchBlocks) {
    const auto input = write("c.txt", "2\n1\n3\n");
    const auto batch = write("q.txt", "1 3 2\n2 2 1\n");
    const auto r = cli({"batch", "--input", input, batch});
    EXPECT_EQ(r.code, kOk);
    EXPECT_EQ(r.out, "# query 1 3 2\n1,2\n2,1\n# query 2 2 1\n1,2\n");
}

TEST_F(CliTest, BatchEdgeCases) {
    const auto input = write("c.txt", "2\n1\n3\n");
    const auto empty = cli({"batch", "--input", input, write("e.txt", "")});
    EXPECT_EQ(empty.code, kOk);
    EXPECT_TRUE(empty.out.empty());

    const auto two_fields = cli({"batch", "--input", input, write("bad.txt", "1 2\n")});
    EXPECT_EQ(two_fields.code, kParseError);
    EXPECT_NE(two_fields.err.find("line 1"), std::string::npos);

    const auto bad_range = cli({"batch", "--input", input, write("r.txt", "1 3 1\n\n3 2 1\n")});
    EXPECT_EQ(bad_range.code, kRangeError);
    EXPECT_NE(bad_range.err.find("line 3"), std::string::npos);
    EXPECT_TRUE(bad_range.out.empty());

    EXPECT_EQ(cli({"batch", "--input", input, write("neg.txt", "1 -3 1\n")}).code, kParseError);
}

TEST_F(CliTest, IngestSaveLoadRoundTrip) {
    const auto input = write("v.txt", "3\n1\n4\n");
    const std::string saved = (dir_ / "v.rsel").string();
    const auto r = cli({"ingest", "--input", input, "--dataset", saved});
    EXPECT_EQ(r.code, kOk);
    const Dataset d = load_dataset(saved);
    EXPECT_EQ(d.size(), 3u);
    EXPECT_EQ(encode_dataset(d), read_file(saved));
    EXPECT_EQ(cli({"query", "--dataset", saved, "1", "3", "1"}).out, "1,2\n");
}

TEST_F(CliTest, BinaryIngest) {
    std::string bytes;
    for (std::int64_t v : {5, -2, 9}) {
        for (int b = 0; b < 8; ++b)
            bytes.push_back(static_cast<char>((static_cast<std::uint64_t>(v) >> (8 * b)) & 0xff));
    }
    const auto input = write("raw.bin", bytes);
    const auto r = cli({"query", "--input", input, "--binary", "1", "3", "1"});
    EXPECT_EQ(r.code, kOk);
    EXPECT_EQ(r.out, "-2,2\n");
}

TEST_F(CliTest, MalformedInputsHaveDistinctCodes) {
    const auto nan = write("n.txt", "1.5\nNaN\n");
    const auto r = cli({"ingest", "--input", nan, "--kind", "float64", "--dataset", (dir_ / "n.rsel").string()});
    EXPECT_EQ(r.code, kParseError);
    EXPECT_NE(r.err.find("line 2"), std::string::npos);

    const auto good = encode_dataset(parse_text("3\n1\n4\n", ElementKind::int64).dataset);
    std::string version = good;
    version[4] = 9;
    EXPECT_EQ(cli({"query", "--dataset", write("m.rsel", "XXXX" + good.substr(4)), "1", "1", "1"}).code, kBadMagic);
    EXPECT_EQ(cli({"query", "--dataset", write("v.rsel", version), "1", "1", "1"}).code, kUnsupportedVersion);
    const auto truncated = cli({"query", "--dataset", write("t.rsel", good.substr(0, 20)), "1", "1", "1"});
    EXPECT_EQ(truncated.code, kTruncated);
    EXPECT_NE(truncated.err.find("expected 38 bytes, found 20"), std::string::npos);
    EXPECT_EQ(cli({"query", "--dataset", (dir_ / "missing.rsel").string(), "1", "1", "1"}).code, kIoError);
    EXPECT_EQ(cli({"query", "1", "1", "1"}).code, kUsageError);
    EXPECT_EQ(cli({"frobnicate"}).code, kUsageError);
}

TEST_F(CliTest, EmptyFileWarns) {
    const auto r = cli({"ingest", "--input", write("e.txt", ""), "--dataset", (dir_ / "e.rsel").string()});
    EXPECT_EQ(r.code, kOk);
    EXPECT_NE(r.err.find("warning"), std::string::npos);
    EXPECT_EQ(cli({"query", "--dataset", (dir_ / "e.rsel").string(), "1", "1", "1"}).code, kRangeError);
}

TEST_F(CliTest, VerifyAlias) {
    const auto input = write("c.txt", "2\n1\n3\n");
    const auto batch = write("q.txt", "1 3 2\n2 2 1\n");
    const auto as_batch = cli({"verify", "--input", input, batch});
    EXPECT_EQ(as_batch.code, kOk);
    EXPECT_EQ(as_batch.out, cli({"batch", "--input", input, batch}).out);
    const auto as_query = cli({"verify", "--input", input, "1", "3", "3"});
    EXPECT_EQ(as_query.code, kOk);
    EXPECT_EQ(as_query.out, "1,2\n2,1\n3,3\n");
}

TEST_F(CliTest, RandomBatchVerifies) {
    std::mt19937_64 rng(9);
    std::string values, queries;
    const std::size_t n = 500;
    for (std::size_t t = 0; t < n; ++t)
        values += std::to_string(static_cast<std::int64_t>(rng() % 40) - 20) + "\n";
    std::size_t lines = 0;
    for (int q = 0; q < 100; ++q) {
        std::size_t i = 1 + rng() % n, j = 1 + rng() % n;
        if (i > j)
            std::swap(i, j);
        const std::size_t k = rng() % 30;
        lines += 1 + std::min(k, j - i + 1);
        queries += std::to_string(i) + " " + std::to_string(j) + " " + std::to_string(k) + "\n";
    }
    const auto r = cli({"batch", "--verify", "--input", write("v.txt", values), write("q.txt", queries)});
    EXPECT_EQ(r.code, kOk);
    EXPECT_EQ(static_cast<std::size_t>(std::count(r.out.begin(), r.out.end(), '\n')), lines);
}

TEST_F(CliTest, BenchSubcommands) {
    const auto pre = cli({"bench", "preprocess", "--sizes", "2^8,512", "--format", "csv", "--reps", "1"});
    EXPECT_EQ(pre.code, kOk);
    EXPECT_EQ(std::count(pre.out.begin(), pre.out.end(), '\n'), 3);
    EXPECT_EQ(pre.out.rfind("strategy,n,k,", 0), 0u);

    const auto q = cli({"bench", "query", "--n", "1024", "--ks", "8", "--strategies", "paper", "--reps", "1"});
    EXPECT_EQ(q.code, kOk);
    EXPECT_NE(q.out.find("paper"), std::string::npos);
    EXPECT_EQ(q.out.find("sort_baseline"), std::string::npos);

    EXPECT_EQ(cli({"bench", "query", "--n", "10", "--ks", "11"}).code, kUsageError);
}

TEST_F(CliTest, HelpStatesOneBasedIndices) {
    const auto r = cli({"--help"});
    EXPECT_EQ(r.code, kOk);
    EXPECT_NE(r.out.find("1-based"), std::string::npos);
}

}  // namespace
}  // namespace rsel::cli
