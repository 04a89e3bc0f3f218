#include <gtest/gtest.h>

#include <map>

#include "dpat/canonical.hpp"
#include "dpat/fequiv.hpp"
#include "dpat/word.hpp"
#include "oracles.hpp"

using namespace dpat;

namespace {

Word W(const char* s) { return parse_word(s); }

bool contains(const std::vector<Word>& v, const Word& w) { return std::find(v.begin(), v.end(), w) != v.end(); }

}  // namespace

TEST(FNeighbors, Examples) {
    const auto nb = f_neighbors(W("1332"));
    EXPECT_TRUE(contains(nb, W("2331")));
    EXPECT_TRUE(contains(nb, W("1232")));
    EXPECT_TRUE(f_neighbors(W("1")).empty());
    EXPECT_TRUE(f_neighbors(W("12")).empty());
    EXPECT_THROW(f_neighbors(W("13")), std::invalid_argument);
}

TEST(ClassifyStep, Shapes) {
    EXPECT_EQ(classify_step(W("1332"), W("2331")).kind, StepKind::swap);
    EXPECT_EQ(classify_step(W("1332"), W("2331")).positions, (std::vector<std::size_t>{1, 4}));
    EXPECT_EQ(classify_step(W("1332"), W("1232")).kind, StepKind::decrement);
    EXPECT_EQ(classify_step(W("1232"), W("1332")).kind, StepKind::increment);
    EXPECT_FALSE(is_f_transformation(W("12"), W("21")));
    EXPECT_FALSE(is_f_transformation(W("1332"), W("1132")));
}

TEST(LexReduceStep, Examples) {
    auto r = lex_reduce_step(W("1332"));
    EXPECT_EQ(r.result, W("1232"));
    ASSERT_EQ(r.steps.size(), 1u);
    EXPECT_EQ(r.steps[0].kind, StepKind::decrement);
    EXPECT_EQ(r.steps[0].positions, std::vector<std::size_t>{2});
    EXPECT_EQ(r.rule, ReductionRule::repeated_entry);
    r = lex_reduce_step(W("1232"));
    EXPECT_EQ(r.result, W("1132"));
    EXPECT_EQ(r.steps[0].positions, std::vector<std::size_t>{2});
    EXPECT_THROW(lex_reduce_step(W("1132")), std::logic_error);
}

TEST(FPathToBeta, Examples) {
    EXPECT_EQ(f_path_to_beta(W("1332")), (std::vector<Word>{W("1332"), W("1232"), W("1132")}));
    EXPECT_EQ(f_path_to_beta(W("1132")), std::vector<Word>{W("1132")});
    EXPECT_EQ(f_path_to_beta(W("321415687")), std::vector<Word>{W("321415687")});
}

TEST(FEquivalent, Examples) {
    EXPECT_TRUE(f_equivalent(W("1332"), W("2331")));
    EXPECT_TRUE(f_equivalent(W("21221"), W("21221")));
    EXPECT_TRUE(f_equivalent(W("1332"), W("1232")));
    EXPECT_FALSE(f_equivalent(W("12"), W("21")));
    EXPECT_TRUE(f_equivalent_bfs(W("1332"), W("1132")));
    EXPECT_TRUE(f_equivalent_bfs(W("2413"), W("2413")));
    EXPECT_FALSE(f_equivalent_bfs(W("1332"), W("2133")));
    EXPECT_THROW(f_equivalent_bfs(W("1234567"), W("1234567")), std::length_error);
}

TEST(FNeighbors, SymmetricAndDEquivalent) {
    for (std::size_t k = 1; k <= 5; ++k)
        for (const auto& p : all_patterns(k))
            for (const auto& s : f_neighbors(p)) {
                ASSERT_TRUE(d_equivalent(p, s));
                ASSERT_TRUE(is_f_transformation(p, s));
                ASSERT_TRUE(contains(f_neighbors(s), p));
            }
}

// Every rule of the reduction is exercised by some pattern of length <= 6.
TEST(LexReduceStep, AllRulesFireAndDecrease) {
    std::map<ReductionRule, int> fired;
    for (std::size_t k = 1; k <= 6; ++k)
        for (const auto& p : all_patterns(k)) {
            if (p == beta_of(p)) continue;
            const auto r = lex_reduce_step(p);
            ++fired[r.rule];
            ASSERT_LT(r.result, p);
            ASSERT_TRUE(d_equivalent(r.result, p));
            Word cur = p;
            for (const auto& st : r.steps) {
                ASSERT_EQ(st.before, cur);
                ASSERT_TRUE(is_f_transformation(st.before, st.after));
                cur = st.after;
            }
            ASSERT_EQ(cur, r.result);
        }
    EXPECT_GT(fired[ReductionRule::repeated_entry], 0);
    EXPECT_GT(fired[ReductionRule::swap_with_predecessor], 0);
    EXPECT_GT(fired[ReductionRule::lower_larger_repeat], 0);
    EXPECT_GT(fired[ReductionRule::raise_smaller_repeat], 0);
}

TEST(FPathToBeta, ValidForAllPatternsUpToSix) {
    for (std::size_t k = 1; k <= 6; ++k)
        for (const auto& p : all_patterns(k)) {
            const auto path = f_path_to_beta(p);
            ASSERT_EQ(path.front(), p);
            ASSERT_EQ(path.back(), beta_of(p));
            for (std::size_t i = 1; i < path.size(); ++i) ASSERT_TRUE(is_f_transformation(path[i - 1], path[i]));
        }
}

TEST(FEquivalent, AgreesWithBfsAndDEquivalenceUpToFour) {
    for (std::size_t k = 1; k <= 4; ++k) {
        const auto pats = all_patterns(k);
        for (const auto& p : pats)
            for (const auto& s : pats) {
                const bool d = d_equivalent(p, s);
                ASSERT_EQ(f_equivalent(p, s), d) << format_word(p) << " " << format_word(s);
                ASSERT_EQ(f_equivalent_bfs(p, s), d) << format_word(p) << " " << format_word(s);
            }
    }
}

TEST(FPathToBeta, RandomLongerPatterns) {
    oracle::Gen gen(23);
    for (int trial = 0; trial < 300; ++trial) {
        const Word p = gen.pattern(gen.size(7, 10));
        const auto path = f_path_to_beta(p);
        ASSERT_EQ(path.back(), beta_of(p));
        for (std::size_t i = 1; i < path.size(); ++i) ASSERT_TRUE(is_f_transformation(path[i - 1], path[i]));
    }
}
