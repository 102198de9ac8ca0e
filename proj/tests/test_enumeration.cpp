#include <gtest/gtest.h>

#include <set>

#include "tableaux/algorithms.hpp"
#include "tableaux/enumeration.hpp"
#include "tableaux/verify.hpp"

namespace {

using namespace tableaux;

const Partition kMu{4, 4, 1, 1};
const Composition kA{1, 3, 2, 2, 2};

TEST(Generators, Counts) {
    // p(n) and 2^(n-1)
    const std::vector<std::size_t> p{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (Part n = 1; n <= 10; ++n) {
        EXPECT_EQ(partitions_of(n).size(), p[static_cast<std::size_t>(n)]);
        EXPECT_EQ(compositions_of(n).size(), std::size_t{1} << (n - 1));
    }
    EXPECT_EQ(partitions_of(0).size(), 1u);
}

TEST(Enumerate, Examples) {
    EXPECT_TRUE(enumerate_tableaux({5, 3}, {2, 6}).empty());
    const std::vector<Tableau> expected{Tableau::from_rows({{1, 2}, {3}}),
                                        Tableau::from_rows({{1, 3}, {2}})};
    EXPECT_EQ(enumerate_tableaux({2, 1}, {1, 1, 1}), expected);
    for (const Composition& a : compositions_of(6))
        EXPECT_EQ(enumerate_tableaux({6}, a).size(), 1u);
}

TEST(Enumerate, Errors) {
    try {
        enumerate_tableaux({3}, {2});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::SumMismatch);
    }
    try {
        enumerate_tableaux({21}, {21});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::CapExceeded);
    }
    EXPECT_EQ(enumerate_tableaux({21}, {21}, 30).size(), 1u);
}

TEST(Enumerate, ContainsTheWorkedExamples) {
    const auto all = enumerate_tableaux(kMu, kA);
    for (const auto& rows : std::vector<std::vector<Row>>{
             {{1, 2, 2, 2}, {3, 3, 4, 5}, {4}, {5}},
             {{1, 2, 2, 4}, {2, 3, 3, 5}, {4}, {5}},
             {{1, 2, 2, 4}, {2, 3, 5, 5}, {3}, {4}},
             {{1, 2, 2, 3}, {2, 4, 4, 5}, {3}, {5}},
         })
        EXPECT_NE(std::find(all.begin(), all.end(), Tableau::from_rows(rows)), all.end());
}

TEST(Kostka, Examples) {
    EXPECT_EQ(kostka({2, 1}, {1, 1, 1}), 2u);
    EXPECT_EQ(kostka({1, 1}, {2}), 0u);
    // frozen from tests/oracles/brute_force.py
    EXPECT_EQ(kostka(kMu, kA), 7u);
    EXPECT_EQ(kostka(kMu, {1, 2, 2, 2, 3}), 7u);
    EXPECT_EQ(kostka(kMu, {3, 2, 2, 2, 1}), 7u);
}

TEST(Kostka, StandardTableauCounts) {
    // f^lambda by the hook length formula, n = 5
    EXPECT_EQ(kostka({5}, {1, 1, 1, 1, 1}), 1u);
    EXPECT_EQ(kostka({4, 1}, {1, 1, 1, 1, 1}), 4u);
    EXPECT_EQ(kostka({3, 2}, {1, 1, 1, 1, 1}), 5u);
    EXPECT_EQ(kostka({3, 1, 1}, {1, 1, 1, 1, 1}), 6u);
    EXPECT_EQ(kostka({2, 2, 1}, {1, 1, 1, 1, 1}), 5u);
}

TEST(BuildPoset, TotalityDependsOnWeight) {
    EXPECT_TRUE(build_poset(kMu, {1, 2, 2, 2, 3}).is_total_order);
    EXPECT_FALSE(build_poset(kMu, kA).is_total_order);
}

TEST(BuildPoset, ExtremesAndCovers) {
    const PosetSummary poset = build_poset(kMu, kA);
    ASSERT_EQ(poset.elements.size(), 7u);
    ASSERT_TRUE(poset.greatest && poset.least);
    EXPECT_EQ(poset.elements[*poset.greatest], greatest_tableau(kMu, kA));
    EXPECT_EQ(poset.elements[*poset.least], least_tableau(kMu, kA));
    EXPECT_TRUE(std::is_sorted(poset.covers.begin(), poset.covers.end()));
    // every cover is a strict relation with nothing in between
    for (auto [lo, hi] : poset.covers) {
        EXPECT_EQ(compare(poset.elements[lo], poset.elements[hi]), ComparisonResult::Less);
        for (std::size_t x = 0; x < poset.elements.size(); ++x)
            EXPECT_FALSE(compare(poset.elements[lo], poset.elements[x]) == ComparisonResult::Less &&
                         compare(poset.elements[x], poset.elements[hi]) == ComparisonResult::Less);
    }
}

TEST(BuildPoset, TotalOrderIsAChain) {
    const PosetSummary poset = build_poset(kMu, {1, 2, 2, 2, 3});
    EXPECT_EQ(poset.covers.size() + 1, poset.elements.size());
}

TEST(BuildPoset, SingletonAndEmpty) {
    const PosetSummary one = build_poset({3, 1}, {3, 1});
    ASSERT_EQ(one.elements.size(), 1u);
    EXPECT_EQ(one.greatest, 0u);
    EXPECT_EQ(one.least, 0u);
    const PosetSummary none = build_poset({5, 3}, {2, 6});
    EXPECT_TRUE(none.elements.empty());
    EXPECT_FALSE(none.greatest.has_value());
}

TEST(RemovableOracle, Examples) {
    EXPECT_TRUE(removable_oracle(kMu, kA, 2));
    EXPECT_FALSE(removable_oracle(kMu, kA, 1));
    EXPECT_TRUE(removable_oracle(kMu, kA, 4));
    EXPECT_FALSE(removable_oracle(kMu, kA, 3));
    EXPECT_THROW(removable_oracle(kMu, kA, 5), Error);
}

TEST(Properties, EnumerationSound) {
    const auto r = check_enumeration_sound(8);
    EXPECT_TRUE(r.passed) << r.failure;
}

TEST(Properties, NonemptinessForPartitionWeights) {
    for (Part n = 1; n <= 8; ++n)
        for (const Partition& mu : partitions_of(n))
            for (const Partition& lam : partitions_of(n))
                EXPECT_EQ(kostka(mu, lam.as_composition()) > 0, dominates(mu, lam));
}

TEST(Properties, RemovableOracle) {
    const auto r = check_removable_oracle(6);
    EXPECT_TRUE(r.passed) << r.failure;
}

TEST(Properties, FloorLeast) {
    const auto r = check_floor_least(6);
    EXPECT_TRUE(r.passed) << r.failure;
}

TEST(Properties, KostkaInvariance) {
    const auto r = check_kostka_invariance(6);
    EXPECT_TRUE(r.passed) << r.failure;
}

} // namespace
