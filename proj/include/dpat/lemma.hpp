#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "dpat/occurrence.hpp"
#include "dpat/word.hpp"

namespace dpat {

/// Explicit bijections on a d-class that carry the statistic (t,A,p) to
/// (t,A,s) for two d-equivalent patterns p, s differing in one position
/// (Lemma1) or by exchanging two consecutive values that each occur once
/// (Lemma2).
///
/// Both maps only rewrite words w that carry the trace at A, i.e.
/// w_A = t_{I(t)}; every other word is a fixed point. On the rewritten
/// words the border entries next to the substituted intervals are pattern
/// values outside the value interval, which is what keeps the descent set
/// intact.

/// Position interval that may be empty (first == last + 1).
struct Gap {
    std::size_t first;
    std::size_t last;
    bool empty() const noexcept { return first > last; }
};

struct Lemma1Instance {
    Word p;
    Word s;
    Trace t;
    PositionSet anchors_at;
    std::size_t host_length = 0;

    std::size_t i = 0;  // 1-based position where s_i = p_i + 1
    Symbol x = 0;       // trace symbol standing for p_i
    Symbol y = 0;       // trace symbol standing for s_i
    Gap gap{1, 0};
    ValueInterval values{0, 0};

    /// Validates the shape and derives i, x, y and the intervals.
    /// Throws std::invalid_argument on a malformed instance.
    static Lemma1Instance make(Word p, Word s, Trace t, PositionSet anchors_at, std::size_t host_length);
};

struct Lemma2Instance {
    Word p;
    Word s;
    Trace t;
    PositionSet anchors_at;
    std::size_t host_length = 0;
    Symbol host_arity = 0;

    std::size_t i = 0;  // 1-based, i < j, p_j = p_i + 1
    std::size_t j = 0;
    ValueInterval values{0, 0};
    Gap left{1, 0};   // [a, b], holds position i of an occurrence
    Gap right{1, 0};  // [a', b'], holds position j

    /// host_arity replaces the upper value bound when p_j is the largest
    /// entry of p. Throws std::invalid_argument on a malformed instance.
    static Lemma2Instance make(Word p, Word s, Trace t, PositionSet anchors_at, std::size_t host_length,
                               Symbol host_arity);
};

/// True when w_A = t_{I(t)}.
bool carries_trace(const Trace& t, const PositionSet& anchors_at, const Word& w);

Word lemma1_map(const Lemma1Instance& inst, const Word& w);
Word lemma1_inverse(const Lemma1Instance& inst, const Word& v);
Word lemma2_map(const Lemma2Instance& inst, const Word& w);
Word lemma2_inverse(const Lemma2Instance& inst, const Word& v);

/// The two-position map with the two psi substitutions applied right interval first.
Word lemma2_map_right_first(const Lemma2Instance& inst, const Word& w);

/// image[k] = index in `words` of map(words[k]); `words` must be sorted.
/// Throws std::logic_error when an image leaves the list.
std::vector<std::size_t> lemma1_class_table(const Lemma1Instance& inst, std::span<const Word> words);
std::vector<std::size_t> lemma2_class_table(const Lemma2Instance& inst, std::span<const Word> words);

}  // namespace dpat
