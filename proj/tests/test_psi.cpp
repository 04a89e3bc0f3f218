#include <gtest/gtest.h>

#include <future>

#include "dpat/psi.hpp"
#include "dpat/word.hpp"
#include "oracles.hpp"

using namespace dpat;

namespace {

Word W(const char* s) { return parse_word(s); }

}  // namespace

TEST(Psi, Examples) {
    EXPECT_EQ(psi(W("1321"), 3), W("1123"));
    EXPECT_EQ(psi(W("1232"), 3), W("2213"));
    EXPECT_EQ(psi(W("3321"), 3), W("3123"));
    EXPECT_EQ(psi(W("21"), 2), W("12"));
    EXPECT_EQ(psi(W("21"), 5), W("12"));
    EXPECT_THROW(psi(W("1321"), 2), std::invalid_argument);
}

TEST(PsiInverse, Examples) {
    EXPECT_EQ(psi_inverse(W("1123"), 3), W("1321"));
    EXPECT_EQ(psi_inverse(W("12"), 2), W("21"));
    for (const auto& r : oracle::cube(4, 3)) {
        const Word w(r);
        ASSERT_EQ(psi_inverse(psi(w, 3), 3), w);
        ASSERT_EQ(psi(psi_inverse(w, 3), 3), w);
    }
}

TEST(CPsi, Examples) {
    EXPECT_EQ(c_psi(W("1321")), W("3321"));
    EXPECT_EQ(c_psi(W("1")), W("1"));
    EXPECT_EQ(c_psi(W("21")), W("21"));
    EXPECT_EQ(c_psi_inverse(W("3321")), W("1321"));
    EXPECT_THROW(c_psi(W("13")), std::invalid_argument);
}

TEST(Psi, CellExampleFromTheConstruction) {
    // Des = {3} within the multiset {1,2,2,3}: 1232, 2231; Asc = {3}: 2213, 3212.
    EXPECT_EQ(psi(W("2231"), 3), W("3212"));
}

TEST(Psi, PropertiesOnSmallCubes) {
    for (std::size_t n = 1; n <= 5; ++n)
        for (int q = 1; q <= 4; ++q) {
            std::set<oracle::Raw> images;
            for (const auto& r : oracle::cube(n, q)) {
                const Word w(r);
                const Word v = psi(w, q);
                const auto image = oracle::raw(v);
                ASSERT_EQ(oracle::alphabet(image), oracle::alphabet(r));
                const int hi = *std::max_element(r.begin(), r.end());
                const int lo = *std::min_element(r.begin(), r.end());
                ASSERT_EQ(std::count(image.begin(), image.end(), hi), std::count(r.begin(), r.end(), hi));
                ASSERT_EQ(std::count(image.begin(), image.end(), lo), std::count(r.begin(), r.end(), lo));
                ASSERT_EQ(oracle::ascents(image), oracle::descents(r)) << format_word(w);
                auto sorted_w = r;
                auto sorted_v = image;
                std::sort(sorted_w.begin(), sorted_w.end());
                std::sort(sorted_v.begin(), sorted_v.end());
                ASSERT_EQ(sorted_v, sorted_w);
                images.insert(image);
            }
            ASSERT_EQ(images.size(), oracle::cube(n, q).size());
        }
}

TEST(PsiTable, BijectionAndAgreement) {
    const auto table = PsiTable::get(4, 3);
    EXPECT_EQ(table->word_count(), 81u);
    EXPECT_TRUE(table->is_bijection());
    for (const auto& r : oracle::cube(4, 3)) {
        const Word w(r);
        ASSERT_EQ(table->image(w), psi(w, 3));
        ASSERT_EQ(table->preimage(table->image(w)), w);
    }
    EXPECT_EQ(PsiTable::get(4, 3).get(), table.get());
    EXPECT_THROW(PsiTable::get(24, 2), std::length_error);
}

TEST(Psi, ConcurrentRequestsSeeOneTable) {
    psi_cache_clear();
    std::vector<std::future<std::shared_ptr<const PsiTable>>> jobs;
    for (int t = 0; t < 4; ++t) jobs.push_back(std::async(std::launch::async, [] { return PsiTable::get(5, 3); }));
    std::set<const PsiTable*> seen;
    for (auto& j : jobs) seen.insert(j.get().get());
    EXPECT_EQ(seen.size(), 1u);
    std::vector<std::future<Word>> words;
    for (int t = 0; t < 8; ++t)
        words.push_back(std::async(std::launch::async, [] { return psi(W("2143231"), 4); }));
    const Word first = words[0].get();
    for (std::size_t t = 1; t < words.size(); ++t) EXPECT_EQ(words[t].get(), first);
}

TEST(Psi, DeterministicAcrossCacheResets) {
    std::vector<Word> before;
    for (const auto& r : oracle::cube(5, 3)) before.push_back(psi(Word(r), 3));
    psi_cache_clear();
    EXPECT_EQ(psi_cache_size(), 0u);
    std::size_t k = 0;
    for (const auto& r : oracle::cube(5, 3)) ASSERT_EQ(psi(Word(r), 3), before[k++]);
    EXPECT_GT(psi_cache_size(), 0u);
}
