#include <gtest/gtest.h>

#include <map>

#include "dpat/word.hpp"
#include "oracles.hpp"

using namespace dpat;

namespace {

Word W(const char* s) { return parse_word(s); }

std::set<std::size_t> S(const PositionSet& p) {
    const auto v = p.to_vector();
    return {v.begin(), v.end()};
}

}  // namespace

TEST(Word, RejectsNonPositiveEntries) {
    EXPECT_THROW(Word({1, 0, 2}), std::invalid_argument);
    EXPECT_THROW(parse_word("1a2"), std::invalid_argument);
    EXPECT_EQ(W("10,2,10,1").arity(), 10);
    EXPECT_EQ(format_word(W("10,2,10,1")), "10,2,10,1");
    EXPECT_EQ(format_word(W("31443")), "31443");
    EXPECT_EQ(Word{}.arity(), 0);
}

TEST(DescentSet, Examples) {
    EXPECT_EQ(descent_set(W("21354")), (PositionSet{1, 4}));
    EXPECT_TRUE(descent_set(W("12345")).empty());
    EXPECT_EQ(descent_set(W("31443")), (PositionSet{1, 4}));
    EXPECT_EQ(descent_set(W("31443")), descent_set(W("21332")));
    EXPECT_TRUE(descent_set(Word{}).empty());
    EXPECT_TRUE(descent_set(W("7")).empty());
}

TEST(AscentSet, Examples) {
    EXPECT_EQ(ascent_set(W("1123")), (PositionSet{2, 3}));
    EXPECT_TRUE(ascent_set(W("54321")).empty());
    EXPECT_EQ(ascent_set(W("2213")), (PositionSet{3}));
}

TEST(DescentWord, Examples) {
    EXPECT_EQ(format_descent_word(descent_word(W("432411231"))), "110100010");
    EXPECT_EQ(format_descent_word(descent_word(W("111"))), "000");
    EXPECT_EQ(format_descent_word(descent_word(W("1332"))), "0010");
    EXPECT_THROW(parse_descent_word("01"), std::invalid_argument);
    EXPECT_THROW(parse_descent_word("0120"), std::invalid_argument);
    EXPECT_EQ(descent_word_of(4, {1, 3}), parse_descent_word("1010"));
}

TEST(Alphabet, Examples) {
    EXPECT_EQ(underlying_alphabet(W("4313")), (Alphabet{1, 3, 4}));
    EXPECT_EQ(underlying_alphabet(W("4212")), (Alphabet{1, 2, 4}));
    EXPECT_EQ(underlying_alphabet(W("11111")), (Alphabet{1}));
    EXPECT_EQ(parse_alphabet("1-5"), (Alphabet{1, 2, 3, 4, 5}));
    EXPECT_EQ(parse_alphabet("1,3-4"), (Alphabet{1, 3, 4}));
}

TEST(DEquivalent, Examples) {
    EXPECT_TRUE(d_equivalent(W("31443"), W("41131")));
    EXPECT_FALSE(d_equivalent(W("31443"), W("21332")));
    EXPECT_TRUE(d_equivalent(W("31443"), W("31443")));
    EXPECT_FALSE(d_equivalent(W("12"), W("123")));
}

TEST(Symmetries, Examples) {
    EXPECT_EQ(complement(W("1123")), W("3321"));
    EXPECT_EQ(reverse(W("123")), W("321"));
    EXPECT_EQ(complement(complement(W("2415"))), W("2415"));
    EXPECT_EQ(reduce(W("3464")), W("1232"));
    EXPECT_EQ(reduce(W("53")), W("21"));
    EXPECT_EQ(reduce(W("1321")), W("1321"));
}

TEST(IsPattern, Examples) {
    EXPECT_TRUE(is_pattern(W("1332")));
    EXPECT_FALSE(is_pattern(W("1443")));
    EXPECT_TRUE(is_pattern(Word{}));
    EXPECT_TRUE(is_permutation(W("2413")));
    EXPECT_FALSE(is_permutation(W("2213")));
}

TEST(EnumerateClass, Examples) {
    EXPECT_EQ(enumerate_class({5, {1, 2, 3, 4, 5}, {1, 4}}).size(), 11u);
    EXPECT_EQ(oracle::permutations_with_descent_set(5, {1, 4}), 11u);
    EXPECT_EQ(enumerate_class({3, {1}, {}}), std::vector<Word>{W("111")});
    EXPECT_EQ(enumerate_class({2, {1, 2}, {1}}), std::vector<Word>{W("21")});
    EXPECT_THROW(enumerate_class({3, {1, 2}, {3}}), std::invalid_argument);
    EXPECT_THROW(enumerate_class({3, {}, {}}), std::invalid_argument);
    EXPECT_TRUE(enumerate_class({2, {1, 2, 3}, {}}).empty());
}

TEST(EnumerateDescentClass, Examples) {
    const auto words = enumerate_descent_class(3, 3, {1});
    for (const char* w : {"211", "212", "213", "311", "312", "313", "322", "323"})
        EXPECT_TRUE(std::binary_search(words.begin(), words.end(), W(w))) << w;
    EXPECT_EQ(enumerate_descent_class(1, 1, {}), std::vector<Word>{W("1")});
    const auto table1 = enumerate_descent_class(8, 5, {2, 3, 5, 6, 7});
    const auto cls = enumerate_class({8, {1, 2, 3, 4, 5}, {2, 3, 5, 6, 7}});
    EXPECT_EQ(cls.size(), 150u);
    EXPECT_TRUE(std::includes(table1.begin(), table1.end(), cls.begin(), cls.end()));
}

TEST(EnumerateClass, MatchesCubeFilterAndPartitionsCube) {
    for (std::size_t n = 1; n <= 5; ++n)
        for (int q = 1; q <= 4; ++q) {
            std::size_t total = 0;
            std::map<std::pair<std::set<int>, std::set<std::size_t>>, std::vector<oracle::Raw>> buckets;
            for (auto& w : oracle::cube(n, q)) buckets[{oracle::alphabet(w), oracle::descents(w)}].push_back(w);
            for (const auto& c : all_classes(n, q)) {
                const auto words = enumerate_class(c);
                ASSERT_FALSE(words.empty());
                ASSERT_EQ(class_size(c), words.size());
                ASSERT_TRUE(std::is_sorted(words.begin(), words.end()));
                const auto& expect = buckets.at({{c.alphabet.begin(), c.alphabet.end()}, S(c.descents)});
                ASSERT_EQ(words.size(), expect.size());
                for (std::size_t k = 0; k < words.size(); ++k) ASSERT_EQ(oracle::raw(words[k]), expect[k]);
                total += words.size();
            }
            EXPECT_EQ(buckets.size(), all_classes(n, q).size());
            std::size_t cube = 1;
            for (std::size_t i = 0; i < n; ++i) cube *= static_cast<std::size_t>(q);
            EXPECT_EQ(total, cube) << "n=" << n << " q=" << q;
        }
}

TEST(EnumerateClass, PermutationCountsMatchInclusionExclusion) {
    for (std::size_t n = 1; n <= 7; ++n) {
        Alphabet a;
        for (std::size_t x = 1; x <= n; ++x) a.insert(static_cast<Symbol>(x));
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << (n - 1)); ++m) {
            const auto d = PositionSet::from_mask(m);
            EXPECT_EQ(class_size({n, a, d}), oracle::permutations_with_descent_set(n, S(d)));
        }
    }
}

TEST(Properties, RandomWords) {
    oracle::Gen gen(7);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t n = gen.size(0, 9);
        const Word w = gen.word(n, gen.symbol(1, 6));
        const auto r = oracle::raw(w);
        const auto des = S(descent_set(w));
        const auto asc = S(ascent_set(w));
        ASSERT_EQ(des, oracle::descents(r));
        ASSERT_EQ(asc, oracle::ascents(r));
        for (auto i : des) ASSERT_FALSE(asc.count(i));
        // Reversal swaps the roles of descents and ascents.
        std::set<std::size_t> mirrored;
        for (auto i : asc) mirrored.insert(n - i);
        ASSERT_EQ(S(descent_set(reverse(w))), mirrored);
        // Complement turns strict descents into strict ascents in place.
        ASSERT_EQ(S(descent_set(complement(w))), asc);
        const Word red = reduce(w);
        ASSERT_TRUE(is_pattern(red));
        ASSERT_EQ(reduce(red), red);
        ASSERT_TRUE(oracle::same_relations(oracle::raw(red), r));
        ASSERT_TRUE(order_isomorphic(red, w));
        ASSERT_TRUE(d_equivalent(w, w));
        ASSERT_EQ(is_pattern(w), oracle::is_pattern(r));
        ASSERT_EQ(parse_word(format_word(w)), w);
    }
}

TEST(Properties, ClassMembersAreExactlyTheDEquivalentWords) {
    oracle::Gen gen(11);
    for (int trial = 0; trial < 200; ++trial) {
        const Word w = gen.word(gen.size(1, 6), gen.symbol(1, 4));
        const auto words = enumerate_class(class_of(w));
        ASSERT_TRUE(std::binary_search(words.begin(), words.end(), w));
        for (const auto& v : words) ASSERT_TRUE(d_equivalent(v, w));
        const auto& c = class_of(w);
        ASSERT_EQ(words.size(), oracle::class_words(c.length, {c.alphabet.begin(), c.alphabet.end()},
                                                    S(c.descents))
                                    .size());
    }
}

TEST(PositionText, RoundTrip) {
    EXPECT_EQ(parse_positions("2,3,5"), (PositionSet{2, 3, 5}));
    EXPECT_TRUE(parse_positions("").empty());
    EXPECT_TRUE(parse_positions("-").empty());
    EXPECT_TRUE(parse_positions("{}").empty());
    EXPECT_EQ(format_positions(PositionSet{1, 4}), "1,4");
    EXPECT_THROW(parse_positions("0"), std::invalid_argument);
}
