#pragma once

#include <cstddef>
#include <vector>

#include "dpat/word.hpp"

namespace dpat {

enum class RunKind { descent, ascent };

/// A maximal factor of a descent word: either 1..10 (descent run, at least
/// one 1) or a block of 0s left over between descent runs (ascent run).
struct Run {
    RunKind kind;
    std::size_t first;  // 1-based, inclusive
    std::size_t last;

    bool contains(std::size_t position) const noexcept { return first <= position && position <= last; }
    friend bool operator==(const Run&, const Run&) = default;
};

using RunDecomposition = std::vector<Run>;

Symbol minimal_arity(const DescentWord& b);
RunDecomposition runs(const DescentWord& b);
/// Index into runs(b) of the run holding each position (0-based vector of run indices).
std::vector<std::size_t> run_index(const RunDecomposition& r, std::size_t n);

/// Lexicographically smallest minimal-arity pattern with descent word b.
Word alpha(const DescentWord& b);

/// omega_i is the rank of i in the precedence order induced by b. The result
/// is an involution (descent runs are reversed in place), so it doubles as
/// the order in which positions are covered.
Word omega(const DescentWord& b);

/// Positions 1..n listed in precedence order (cover order for beta).
std::vector<std::size_t> cover_order(const DescentWord& b);

/// Lexicographically smallest q-ary pattern with descent word b. Built in a
/// single pass over the cover order with a running maximum of alpha.
/// Throws std::invalid_argument unless minimal_arity(b) <= q <= n.
Word beta(Symbol q, const DescentWord& b);

Word alpha_of(const Word& pattern);
Word omega_of(const Word& pattern);
Word beta_of(const Word& pattern);

}  // namespace dpat
