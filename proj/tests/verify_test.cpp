#include <gtest/gtest.h>

#include "schroeder/verify.hpp"

using namespace schroeder;

TEST(VerifySuites, AllPassAtSmallSize) {
    const std::vector<SuiteResult> results = run_all_suites(3);
    ASSERT_EQ(results.size(), 9u);
    for (const SuiteResult& r : results) {
        EXPECT_TRUE(r.passed) << r.name << ": " << r.counterexample;
        EXPECT_TRUE(r.counterexample.empty()) << r.name;
        EXPECT_GT(r.cases, 0) << r.name;
    }
    EXPECT_EQ(results[0].name, "table_round_trip");
    EXPECT_EQ(results[4].name, "count_agreement");
    EXPECT_EQ(results[4].note, "counts 1 2 6 22");
}

TEST(VerifySuites, CaseCounts) {
    // permutation-driven suites see sum (n+1)! cases, path-driven sum r_n
    EXPECT_EQ(check_table_round_trip(2).cases, 1 + 2 + 6);
    EXPECT_EQ(check_proposition(4).cases, 1 + 2 + 6 + 24 + 120);
    EXPECT_EQ(check_decode_round_trip(3).cases, 1 + 2 + 6 + 22);
    EXPECT_EQ(check_encode_round_trip(3).cases, 1 + 2 + 6 + 22);
}

TEST(VerifySuites, AreaOracleCapsItself) {
    const SuiteResult r = check_area_oracle(kMaxVerifyN);
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.n_max, kMaxAreaOracleN);
}

TEST(VerifySuites, StatisticTransportCoversHistograms) {
    const SuiteResult r = check_statistic_transport(4);
    EXPECT_TRUE(r.passed) << r.counterexample;
    EXPECT_EQ(r.cases, 1 + 2 + 6 + 22 + 90);
}
