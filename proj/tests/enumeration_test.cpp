#include <gtest/gtest.h>

#include <set>

#include "schroeder/enumeration.hpp"
#include "schroeder/text.hpp"

using namespace schroeder;

TEST(SchroderNumbers, FirstValues) {
    EXPECT_EQ(schroder_numbers(0), (std::vector<long long>{1}));
    EXPECT_EQ(schroder_numbers(3), (std::vector<long long>{1, 2, 6, 22}));
    EXPECT_EQ(schroder_numbers(5), (std::vector<long long>{1, 2, 6, 22, 90, 394}));
    EXPECT_EQ(schroder_numbers(12).back(), 27297738);
    EXPECT_THROW(schroder_numbers(-1), std::invalid_argument);
}

TEST(SchroderNumbers, MatchesExhaustiveEnumeration) {
    std::vector<long long> r = schroder_numbers(6);
    for (int n = 0; n <= 6; ++n) {
        long long count = 0;
        for_each_schroder_path(n, [&](const SchroederPath&) { ++count; });
        EXPECT_EQ(count, r[n]) << n;
    }
}

TEST(SchroderNumbers, CheckedOverflow) {
    EXPECT_NO_THROW(schroder_numbers(27));  // last size that fits signed 64-bit
    EXPECT_THROW(schroder_numbers(28), std::overflow_error);
}

TEST(AvoiderCensus, CountsAndOrder) {
    std::vector<long long> r = schroder_numbers(5);
    for (int n = 0; n <= 5; ++n) {
        long long count = 0;
        for_each_avoider(n, [&](const Permutation& p) {
            ++count;
            EXPECT_TRUE(avoids_class(p)) << to_string(p);
        });
        EXPECT_EQ(count, r[n]) << n;
    }
    std::vector<std::string> order;
    for_each_avoider(1, [&](const Permutation& p) { order.push_back(to_string(p)); });
    EXPECT_EQ(order, (std::vector<std::string>{"1 0", "0 1"}));  // table order (0), (1)
    EXPECT_THROW(for_each_avoider(kMaxCensusN + 1, [](const Permutation&) {}),
                 CapExceeded);
}

TEST(AvoiderCensus, MatchesFilterRoute) {
    for (int n = 0; n <= 5; ++n) {
        std::set<std::string> table_route, filter_route;
        for_each_avoider(n, [&](const Permutation& p) { table_route.insert(to_string(p)); });
        for_each_permutation(n, [&](const Permutation& p) {
            if (avoids_class(p)) filter_route.insert(to_string(p));
        });
        EXPECT_EQ(table_route, filter_route) << n;
    }
}

TEST(Histograms, FrozenSmallCases) {
    using Bins = std::map<long long, long long>;
    EXPECT_EQ(area_histogram(0).bins(), (Bins{{0, 1}}));
    EXPECT_EQ(area_histogram(1).bins(), (Bins{{0, 1}, {1, 1}}));
    EXPECT_EQ(area_histogram(2).bins(), (Bins{{0, 1}, {1, 2}, {2, 2}, {3, 1}}));
    EXPECT_EQ(area_histogram(3).bins(),
              (Bins{{0, 1}, {1, 2}, {2, 4}, {3, 6}, {4, 5}, {5, 3}, {6, 1}}));
    EXPECT_EQ(coinversion_histogram(0).bins(), (Bins{{0, 1}}));
    EXPECT_EQ(coinversion_histogram(1).bins(), (Bins{{0, 1}, {1, 1}}));
    EXPECT_EQ(area_histogram(3).total(), 22);
}

TEST(Histograms, EquidistributionSmall) {
    for (int n = 0; n <= 5; ++n) {
        StatHistogram area = area_histogram(n);
        EXPECT_EQ(area, coinversion_histogram(n)) << n;
        EXPECT_EQ(area.total(), schroder_numbers(n).back()) << n;
    }
    EXPECT_THROW(area_histogram(kMaxCensusN + 1), CapExceeded);
    EXPECT_THROW(coinversion_histogram(kMaxCensusN + 1), CapExceeded);
}

TEST(StatHistogram, Accumulates) {
    StatHistogram h;
    EXPECT_EQ(h.total(), 0);
    EXPECT_TRUE(h.bins().empty());
    h.add(3);
    h.add(3);
    h.add(0);
    EXPECT_EQ(h.total(), 3);
    EXPECT_EQ(h.bins().at(3), 2);
    EXPECT_EQ(h.bins().at(0), 1);
}
