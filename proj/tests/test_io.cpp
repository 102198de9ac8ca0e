#include <gtest/gtest.h>

#include "tableaux/io.hpp"
#include "tableaux/verify.hpp"

namespace {

using namespace tableaux;

ErrorCode parse_error(std::string_view text) {
    try {
        parse_partition(text);
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "accepted \"" << text << "\"";
    return ErrorCode::UsageError;
}

TEST(ParseSequence, Examples) {
    EXPECT_EQ(parse_partition("4,4,1,1"), (Partition{4, 4, 1, 1}));
    EXPECT_EQ(parse_composition("1,3,2,2,2"), (Composition{1, 3, 2, 2, 2}));
    EXPECT_EQ(parse_partition(""), Partition{});
    EXPECT_EQ(parse_composition("12"), (Composition{12}));
}

TEST(ParseSequence, Rejects) {
    EXPECT_EQ(parse_error("4,5,1"), ErrorCode::InvalidSequence);
    EXPECT_EQ(parse_error("4,0"), ErrorCode::InvalidSequence);
    EXPECT_EQ(parse_error("4,-1"), ErrorCode::InvalidSequence);
    EXPECT_EQ(parse_error("4, 1"), ErrorCode::InvalidSequence);
    EXPECT_EQ(parse_error("4,,1"), ErrorCode::InvalidSequence);
    EXPECT_EQ(parse_error("4,1,"), ErrorCode::InvalidSequence);
    EXPECT_EQ(parse_error("+4"), ErrorCode::InvalidSequence);
    EXPECT_EQ(parse_error("4x"), ErrorCode::InvalidSequence);
    EXPECT_EQ(parse_error("99999999999999999999"), ErrorCode::Overflow);
}

TEST(FormatSequence, RoundTrip) {
    for (Part n = 1; n <= 7; ++n)
        for (const Composition& a : compositions_of(n))
            EXPECT_EQ(parse_composition(format_sequence(a)), a);
    EXPECT_EQ(format_sequence(Partition{}), "");
}

TEST(TableauText, Format) {
    const Tableau t = Tableau::from_rows({{1, 2, 2, 2}, {3, 3, 4, 5}, {4}, {5}});
    EXPECT_EQ(format_tableau_text(t), "1 2 2 2\n3 3 4 5\n4\n5\n");
    EXPECT_EQ(parse_tableau_text("1 2 2 2\n3 3 4 5\n4\n5\n"), t);
    EXPECT_EQ(parse_tableau_text(""), Tableau{});
    EXPECT_THROW(parse_tableau_text("1  2\n"), Error);
    EXPECT_THROW(parse_tableau_text("1\n2 3\n"), Error);
}

TEST(TableauJson, Format) {
    const Tableau t = Tableau::from_rows({{1, 2, 2, 2}, {3, 3, 4, 5}, {4}, {5}});
    EXPECT_EQ(format_tableau_json(t),
              R"({"rows":[[1,2,2,2],[3,3,4,5],[4],[5]],"shape":[4,4,1,1]})");
    EXPECT_THROW(parse_tableau_json(R"({"rows":[[1,2]],"shape":[3]})"), Error);
    EXPECT_THROW(parse_tableau_json(R"({"rows":[[1,2]]})"), Error);
    EXPECT_THROW(parse_tableau_json("not json"), Error);
}

TEST(TableauJson, RoundTripEveryEnumeratedTableau) {
    detail::for_each_dominating_pair(6, [](const Partition& mu, const Composition& a) {
        for (const Tableau& t : enumerate_tableaux(mu, a)) {
            ASSERT_EQ(parse_tableau_json(format_tableau_json(t)), t);
            ASSERT_EQ(parse_tableau_text(format_tableau_text(t)), t);
        }
    });
}

TEST(ReadingWord, Example) {
    EXPECT_EQ(reading_word(Tableau::from_rows({{1, 2, 2, 4}, {2, 3, 5, 5}, {3}, {4}})),
              "1224|2355|3|4");
}

TEST(Dot, ChainOfTwo) {
    const PosetSummary poset = build_poset({2, 1}, {1, 1, 1});
    EXPECT_EQ(to_dot(poset), "digraph stab {\n"
                             "  n0 [label=\"12|3\"];\n"
                             "  n1 [label=\"13|2\"];\n"
                             "  n1 -> n0;\n"
                             "}\n");
}

TEST(RenderTrace, GreatestHeaderAndLastRow) {
    const auto built = greatest_tableau_traced({2, 1}, {1, 1, 1});
    EXPECT_EQ(render_trace(built.trace, TraceStyle::Strip, 'T'),
              "nu | b | rho | T\n"
              "(2,1) | (1,1,1) | (2) | T(2,1)=3\n"
              "(2) | (1,1) | (1) | T(1,2)=2\n"
              "(1) | (1) |  | T(1,1)=1\n");
}

} // namespace
