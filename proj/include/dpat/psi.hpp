#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "dpat/word.hpp"

namespace dpat {

/// Bijection on [q]^n turning the descent set into the ascent set while
/// keeping the symbol multiset (hence the alphabet and the multiplicities of
/// the largest and smallest entries).
///
/// Construction: the rearrangements of a multiset M split into cells
/// {w : Des w = S} and {w : Asc w = S}. The two have equal size for every S;
/// psi sends the r-th word (lexicographic) of the first to the r-th word of
/// the second. Because cells depend only on M, psi does not depend on q;
/// q only bounds the domain.
///
/// Cells are cached per multiset behind a mutex; cache entries are immutable
/// once published. DPAT_PSI_CACHE_LIMIT (number of multisets, default 65536)
/// caps the cache; it is flushed when the cap is hit.

/// Throws std::invalid_argument if some entry of w exceeds q.
Word psi(const Word& w, Symbol q);
Word psi_inverse(const Word& w, Symbol q);

/// complement(psi(w)) for a pattern w.
Word c_psi(const Word& w);
Word c_psi_inverse(const Word& w);

/// Number of multisets currently cached.
std::size_t psi_cache_size();
void psi_cache_clear();

/// Whole-cube image table for verification sweeps. Words are indexed by
/// their base-q code (first entry most significant).
class PsiTable {
public:
    static constexpr std::uint64_t kMaxWords = 10'000'000;

    /// Shared, built on first request per (n, q). Throws std::length_error
    /// when q^n exceeds kMaxWords.
    static std::shared_ptr<const PsiTable> get(std::size_t n, Symbol q);

    std::size_t length() const noexcept { return n_; }
    Symbol arity() const noexcept { return q_; }
    std::uint64_t word_count() const noexcept { return image_.size(); }

    std::uint64_t code(const Word& w) const;
    Word decode(std::uint64_t code) const;
    Word image(const Word& w) const { return decode(image_.at(code(w))); }
    Word preimage(const Word& w) const { return decode(preimage_.at(code(w))); }

    /// True when image is a permutation of the cube.
    bool is_bijection() const;

private:
    PsiTable(std::size_t n, Symbol q);

    std::size_t n_;
    Symbol q_;
    std::vector<std::uint64_t> image_;
    std::vector<std::uint64_t> preimage_;
};

}  // namespace dpat
