#include <gtest/gtest.h>

#include "rsel/oracle.hpp"

namespace rsel::oracle {
namespace {

using Seq = ValueSequence<std::int64_t>;
using Item = SelectedItem<std::int64_t>;

TEST(OracleRmq, Examples) {
    EXPECT_EQ(oracle_rmq(Seq{3, 1, 4, 1, 5}, 1, 5), 2u);
    EXPECT_EQ(oracle_rmq(Seq{9}, 1, 1), 1u);
    EXPECT_EQ(oracle_rmq(Seq{5, 4, 3}, 2, 3), 3u);
    EXPECT_THROW(oracle_rmq(Seq{5, 4, 3}, 3, 2), RangeError);
    EXPECT_THROW(oracle_rmq(Seq{5, 4, 3}, 1, 4), RangeError);
}

TEST(OracleSelect, Examples) {
    const Seq a{3, 1, 4, 1, 5, 9, 2, 6};
    const auto result = oracle_select(a, {2, 7, 3});
    EXPECT_EQ(result.items, (std::vector<Item>{{1, 2}, {1, 4}, {2, 7}}));
    EXPECT_EQ(result.stats, QueryStats{});
    EXPECT_EQ(oracle_select(a, {6, 6, 4}).items, (std::vector<Item>{{9, 6}}));
    EXPECT_TRUE(oracle_select(a, {1, 8, 0}).items.empty());
    EXPECT_THROW(oracle_select(a, {0, 8, 1}), RangeError);
}

TEST(OracleSelect, SortedByValueThenIndex) {
    const Seq a{2, 0, 2, 0, 1};
    EXPECT_EQ(oracle_select(a, {1, 5, 5}).items, (std::vector<Item>{{0, 2}, {0, 4}, {1, 5}, {2, 1}, {2, 3}}));
}

TEST(CheckAgainstOracle, ReportsEachKindOfDefect) {
    const Seq a{2, 0, 2, 0, 1};
    const QueryRequest req{1, 5, 3};
    EXPECT_EQ(check_against_oracle(a, req, {{0, 4}, {0, 2}, {1, 5}}), "");
    EXPECT_NE(check_against_oracle(a, req, {{0, 2}, {0, 4}}), "");
    EXPECT_NE(check_against_oracle(a, req, {{0, 2}, {1, 5}, {0, 4}}), "");
    EXPECT_NE(check_against_oracle(a, req, {{0, 2}, {0, 2}, {1, 5}}), "");
    EXPECT_NE(check_against_oracle(a, req, {{0, 2}, {0, 1}, {1, 5}}), "");
    EXPECT_NE(check_against_oracle(a, {2, 5, 3}, {{0, 2}, {0, 4}, {1, 1}}), "");
}

}  // namespace
}  // namespace rsel::oracle
