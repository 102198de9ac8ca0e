#include <gtest/gtest.h>

#include "tableaux/tableau.hpp"
#include "tableaux/verify.hpp"

namespace {

using namespace tableaux;

const Partition kMu{4, 4, 1, 1};
const Composition kA{1, 3, 2, 2, 2};

// Worked-example tableaux for shape (4,4,1,1), weight (1,3,2,2,2).
Tableau greatest_example() { return Tableau::from_rows({{1, 2, 2, 2}, {3, 3, 4, 5}, {4}, {5}}); }
Tableau fill_example() { return Tableau::from_rows({{1, 2, 2, 4}, {2, 3, 3, 5}, {4}, {5}}); }
Tableau least_example() { return Tableau::from_rows({{1, 2, 2, 4}, {2, 3, 5, 5}, {3}, {4}}); }
Tableau incomparable_t() { return Tableau::from_rows({{1, 2, 2, 3}, {2, 4, 4, 5}, {3}, {5}}); }

TEST(Tableau, ShapeMustMatchRows) {
    try {
        Tableau(Partition{2, 1}, {{1, 2}, {2, 3}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ShapeMismatch);
    }
    EXPECT_THROW(Tableau(Partition{2}, {{1, 2}, {3}}), Error);
    EXPECT_THROW(Tableau::from_rows({{1}, {2, 3}}), Error);
    EXPECT_THROW(Tableau::from_rows({{1, 0}}), Error);
}

TEST(Tableau, OneBasedAccess) {
    const Tableau t = greatest_example();
    EXPECT_EQ(t.at(2, 4), 5);
    EXPECT_EQ(t.at(4, 1), 5);
    EXPECT_EQ(t.at(1, 1), 1);
    EXPECT_EQ(t.max_entry(), 5);
}

TEST(Validate, Examples) {
    EXPECT_TRUE(validate(greatest_example(), kMu, kA));
    EXPECT_TRUE(validate(least_example(), kMu, kA));
    EXPECT_TRUE(validate(fill_example(), kMu, kA));
    EXPECT_FALSE(validate(Tableau::from_rows({{1, 1}, {1}}), Partition{2, 1}, Composition{3}));
}

TEST(Validate, WeightMustMatchExactly) {
    const Tableau t = Tableau::from_rows({{1, 3}});
    // values {1,3}: max entry exceeds the height of (1,1)
    EXPECT_FALSE(validate(t, Partition{2}, Composition{1, 1}));
    EXPECT_FALSE(validate(greatest_example(), kMu, Composition{1, 2, 3, 2, 2}));
    EXPECT_FALSE(validate(greatest_example(), kMu, Composition{1, 3, 2, 2, 1, 1}));
}

TEST(Validate, ShapeMismatchIsAnError) {
    try {
        validate(greatest_example(), Partition{4, 4, 2}, kA);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ShapeMismatch);
    }
}

TEST(Weight, Examples) {
    EXPECT_EQ(weight(greatest_example()), kA);
    EXPECT_EQ(weight(Tableau::from_rows({{1}})), (Composition{1}));
    EXPECT_EQ(weight(fill_example()), kA);
}

TEST(Weight, MissingValueIsZeroCount) {
    try {
        weight(Tableau::from_rows({{1, 3}}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ZeroCount);
    }
}

TEST(CumulativeShape, LevelThree) {
    EXPECT_EQ(cumulative_shape(incomparable_t(), 3), (Partition{4, 1, 1}));
    EXPECT_EQ(cumulative_shape(fill_example(), 3), (Partition{3, 3}));
    EXPECT_EQ(cumulative_shape(greatest_example(), 5), kMu);
    EXPECT_EQ(cumulative_shape(greatest_example(), 1), (Partition{1}));
}

TEST(CumulativeShape, NestedHorizontalStrips) {
    for (const Tableau& t : enumerate_tableaux(kMu, kA)) {
        for (Part p = 1; p < 5; ++p) {
            const Partition lower = cumulative_shape(t, p);
            const Partition upper = cumulative_shape(t, p + 1);
            EXPECT_TRUE(contains(lower, upper));
            EXPECT_TRUE(is_totally_disconnected(upper, lower));
        }
    }
}

TEST(Compare, Examples) {
    EXPECT_EQ(compare(fill_example(), incomparable_t()), ComparisonResult::Incomparable);
    EXPECT_EQ(compare(incomparable_t(), fill_example()), ComparisonResult::Incomparable);
    EXPECT_EQ(compare(least_example(), least_example()), ComparisonResult::Equal);
    EXPECT_EQ(compare(greatest_example(), least_example()), ComparisonResult::Greater);
    EXPECT_EQ(compare(least_example(), greatest_example()), ComparisonResult::Less);
}

TEST(CompareRecursive, Examples) {
    EXPECT_EQ(compare_recursive(fill_example(), incomparable_t()), ComparisonResult::Incomparable);
    EXPECT_EQ(compare_recursive(least_example(), least_example()), ComparisonResult::Equal);
    EXPECT_EQ(compare_recursive(greatest_example(), least_example()), ComparisonResult::Greater);
    const Tableau single = Tableau::from_rows({{1, 1, 1}});
    EXPECT_EQ(compare_recursive(single, single), ComparisonResult::Equal);
}

TEST(Compare, MixedPosetRejected) {
    const Tableau a = Tableau::from_rows({{1, 2}});
    const Tableau b = Tableau::from_rows({{1}, {2}});
    const Tableau c = Tableau::from_rows({{1, 1}});
    for (auto [s, t] : {std::pair{a, b}, std::pair{a, c}}) {
        try {
            compare(s, t);
            FAIL();
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::MixedPoset);
        }
        EXPECT_THROW(compare_recursive(s, t), Error);
    }
}

TEST(TopMaxRow, Examples) {
    EXPECT_EQ(top_max_row(greatest_example()), 2u);
    EXPECT_EQ(top_max_row(fill_example()), 2u);
    EXPECT_EQ(top_max_row(incomparable_t()), 2u);
    EXPECT_EQ(top_max_row(Tableau::from_rows({{1, 2}, {2}})), 1u);
}

TEST(Properties, OrderAxioms) {
    const auto r = check_poset_axioms(7);
    EXPECT_TRUE(r.passed) << r.failure;
}

TEST(Properties, CompareAgreesWithRecursiveRule) {
    const auto r = check_definition_equivalences(7);
    EXPECT_TRUE(r.passed) << r.failure;
}

TEST(Properties, CornerRowBounds) {
    const auto r = check_corner_bounds(8);
    EXPECT_TRUE(r.passed) << r.failure;
}

} // namespace
