#include <gtest/gtest.h>

#include "dpat/occurrence.hpp"
#include "dpat/verify.hpp"
#include "dpat/word.hpp"
#include "oracles.hpp"

using namespace dpat;

namespace {

Word W(const char* s) { return parse_word(s); }

std::vector<std::optional<int>> cells(const Trace& t) { return {t.cells().begin(), t.cells().end()}; }

}  // namespace

TEST(OccurrencesCount, Examples) {
    EXPECT_EQ(occurrences_count(W("213"), W("21354")), 3u);
    EXPECT_EQ(occurrences_count(W("312"), W("51243")), 5u);
    EXPECT_EQ(occurrences_count(W("11"), W("111")), 3u);
    EXPECT_EQ(occurrences_count(W("21"), W("12")), 0u);
    EXPECT_EQ(occurrences_count(W("123"), W("12")), 0u);
}

TEST(OccurrencesCount, EnumerationListsPositions) {
    std::vector<std::vector<std::size_t>> seen;
    for_each_occurrence(W("213"), W("21354"),
                        [&](std::span<const std::size_t> p) { seen.emplace_back(p.begin(), p.end()); });
    const std::vector<std::vector<std::size_t>> expect{{1, 2, 3}, {1, 2, 4}, {1, 2, 5}};
    EXPECT_EQ(seen, expect);
}

TEST(Popularity, Examples) {
    const DClass perms{5, {1, 2, 3, 4, 5}, {1, 4}};
    EXPECT_EQ(popularity(W("213"), perms), 20u);
    EXPECT_EQ(popularity(W("312"), perms), 20u);
    const DClass c{6, {1, 2, 4}, {2, 5}};
    EXPECT_EQ(popularity(W("1"), c), 6 * class_size(c));
}

TEST(IsTrace, Examples) {
    EXPECT_TRUE(is_trace(parse_trace("_44_"), W("1332")));
    EXPECT_TRUE(is_trace(parse_trace("_44_"), W("2331")));
    EXPECT_TRUE(is_trace(parse_trace("_55_"), W("1332")));
    EXPECT_TRUE(is_trace(Trace::all_holes(4), W("2413")));
    EXPECT_FALSE(is_trace(parse_trace("14_"), W("321")));
    EXPECT_EQ(format_trace(parse_trace("1_54")), "1_54");
    EXPECT_EQ(format_trace(parse_trace("_,10,10,_")), "_,10,10,_");
}

TEST(TraceStatistic, Examples) {
    EXPECT_EQ(trace_statistic(parse_trace("_55_"), {2, 4}, W("1332"), W("154543")), 2u);
    EXPECT_EQ(trace_statistic(parse_trace("_44_"), {3, 5}, W("1332"), W("154543")), 1u);
    EXPECT_EQ(trace_statistic(parse_trace("1_54"), {2, 8, 10}, W("1132"), W("21143615441")), 2u);
    EXPECT_THROW(trace_statistic(parse_trace("1_54"), {2, 8}, W("1132"), W("21143615441")), std::invalid_argument);
    // Empty I(t): the statistic is the plain count.
    EXPECT_EQ(trace_statistic(Trace::all_holes(3), {}, W("213"), W("21354")), 3u);
}

TEST(Restrict, Examples) {
    auto r = restrict_word(W("21143615441"), {3, 7}, {1, 4});
    EXPECT_EQ(r.subword, W("1431"));
    EXPECT_EQ(r.positions, (std::vector<std::size_t>{3, 4, 5, 7}));
    EXPECT_EQ(restrict_word(W("217349648815371"), {4, 8}, {3, 6}).subword, W("3464"));
    const Word w = W("2413");
    EXPECT_EQ(restrict_word(w, {1, 4}, {1, w.arity()}).subword, w);
    EXPECT_THROW(restrict_word(w, {3, 2}, {1, 4}), std::invalid_argument);
}

TEST(Substitute, Examples) {
    EXPECT_EQ(substitute(W("21143615441"), {3, 7}, {1, 4}, W("3321")), W("21443615441"));
    const Word w = W("217349648815371");
    EXPECT_EQ(substitute(w, {4, 8}, {3, 6}, reduce(restrict_word(w, {4, 8}, {3, 6}).subword)), w);
    // Positions 12-13 hold 5 and 3; rewritten increasing they read 3, 5.
    const Word v = substitute(w, {12, 13}, {3, 6}, W("12"));
    EXPECT_EQ(v.at(12), 3);
    EXPECT_EQ(v.at(13), 5);
    EXPECT_THROW(substitute(w, {4, 8}, {3, 6}, W("12")), std::invalid_argument);
    EXPECT_THROW(substitute(w, {4, 8}, {3, 6}, W("1242")), std::invalid_argument);
}

TEST(OccurrencesCount, AgreesWithSubsetScanAndDp) {
    oracle::Gen gen(3);
    for (int trial = 0; trial < 3000; ++trial) {
        const Word p = gen.pattern(gen.size(1, 5));
        const Word w = gen.word(gen.size(0, 10), gen.symbol(1, 6));
        const Count expect = oracle::count(oracle::raw(p), oracle::raw(w));
        ASSERT_EQ(occurrences_count(p, w), expect) << format_word(p) << " in " << format_word(w);
        ASSERT_EQ(occurrences_count_dp(p, w), expect) << format_word(p) << " in " << format_word(w);
    }
}

TEST(OccurrencesCount, WordContainsItsReduction) {
    oracle::Gen gen(5);
    for (int trial = 0; trial < 300; ++trial) {
        const Word w = gen.word(gen.size(1, 8), gen.symbol(1, 5));
        ASSERT_GE(occurrences_count(reduce(w), w), 1u);
    }
}

TEST(TraceStatistic, AgreesWithDefinition) {
    oracle::Gen gen(13);
    int nonzero = 0;
    for (int trial = 0; trial < 1500; ++trial) {
        const std::size_t k = gen.size(1, 4);
        const Word p = gen.pattern(k);
        const Word w = gen.word(gen.size(k, 8), gen.symbol(1, 4));
        // Anchors taken from a real occurrence half of the time.
        std::vector<std::size_t> pos;
        if (trial % 2 == 0) {
            for_each_occurrence(p, w, [&](std::span<const std::size_t> o) {
                if (pos.empty()) pos.assign(o.begin(), o.end());
            });
        }
        if (pos.empty()) {
            for (std::size_t i = 1; i <= k; ++i) pos.push_back(i + (w.size() - k) * (trial % 3 == 0));
        }
        std::vector<std::optional<Symbol>> tc(k);
        std::vector<std::size_t> at;
        for (std::size_t c = 0; c < k; ++c)
            if (gen.symbol(0, 2) != 0) {
                tc[c] = w[pos[c] - 1];
                at.push_back(pos[c]);
            }
        const Trace t(tc);
        if (!is_trace(t, p)) continue;
        const Count got = trace_statistic(t, PositionSet::from_vector(at), p, w);
        ASSERT_EQ(got, oracle::trace_stat(cells(t), at, oracle::raw(p), oracle::raw(w)))
            << format_trace(t) << " " << format_word(p) << " " << format_word(w);
        nonzero += got != 0;
    }
    EXPECT_GT(nonzero, 100);
}

TEST(TraceStatistic, DecompositionSumsToCount) {
    oracle::Gen gen(17);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t k = gen.size(1, 4);
        const Word p = gen.pattern(k);
        const Word w = gen.word(gen.size(1, 8), gen.symbol(1, 4));
        const std::size_t hole = gen.size(1, k);
        ASSERT_EQ(trace_decomposition_sum(p, w, hole), oracle::count(oracle::raw(p), oracle::raw(w)));
    }
}

// Substituting a pattern of the same class rewrites exactly the restricted
// positions, and substituting the original reduction back restores the word.
TEST(Substitute, PreservesDEquivalenceAndInverts) {
    oracle::Gen gen(19);
    int moved = 0;
    for (int trial = 0; trial < 1500; ++trial) {
        const std::size_t n = gen.size(1, 6);
        const Word w = gen.word(n, gen.symbol(1, 4));
        const std::size_t a = gen.size(1, n);
        const std::size_t b = gen.size(a, n);
        const Symbol c = gen.symbol(1, 4);
        const Symbol d = gen.symbol(c, 4);
        const auto r = restrict_word(w, {a, b}, {c, d});
        if (r.subword.empty()) continue;
        const Word u = reduce(r.subword);
        for (const auto& alt : enumerate_class(class_of(u))) {
            const Word v = substitute(w, {a, b}, {c, d}, alt);
            const auto rv = restrict_word(v, {a, b}, {c, d});
            ASSERT_EQ(rv.positions, r.positions) << format_word(w) << " -> " << format_word(v);
            ASSERT_EQ(reduce(rv.subword), alt);
            ASSERT_EQ(substitute(v, {a, b}, {c, d}, u), w);
            moved += v != w;
        }
    }
    EXPECT_GT(moved, 50);
}
