#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dpat/word.hpp"

namespace dpat {

using Count = std::uint64_t;

/// A pattern template over symbols plus holes. I(t) lists the non-hole cells.
class Trace {
public:
    Trace() = default;
    explicit Trace(std::vector<std::optional<Symbol>> cells);
    static Trace all_holes(std::size_t k);

    std::size_t size() const noexcept { return cells_.size(); }
    bool is_hole(std::size_t i) const { return !cells_.at(i).has_value(); }  // 0-based
    Symbol value(std::size_t i) const { return cells_.at(i).value(); }      // 0-based
    const std::vector<std::optional<Symbol>>& cells() const noexcept { return cells_; }

    /// I(t), 1-based.
    std::vector<std::size_t> anchors() const;
    std::size_t hole_count() const noexcept;
    /// t restricted to I(t).
    Word anchored_word() const;

    friend bool operator==(const Trace&, const Trace&) = default;

private:
    std::vector<std::optional<Symbol>> cells_;
};

/// "_" marks a hole: "_44_" or "_,10,10,_".
Trace parse_trace(const std::string& text);
std::string format_trace(const Trace& t);

/// t_{I(t)} and p_{I(t)} are order-isomorphic.
bool is_trace(const Trace& t, const Word& pattern);

/// Visits every occurrence as its 1-based position list.
void for_each_occurrence(const Word& pattern, const Word& w,
                         const std::function<void(std::span<const std::size_t>)>& visit);

/// Number of position subsets whose subword is order-isomorphic with the
/// pattern (equalities respected). Pruned subset enumeration.
Count occurrences_count(const Word& pattern, const Word& w);

/// Same count via memoised DP over (host position, pattern prefix, values
/// bound so far to pattern symbols). Kept as an independent route.
Count occurrences_count_dp(const Word& pattern, const Word& w);

Count popularity(const Word& pattern, const DClass& c);
Count popularity(const Word& pattern, std::span<const Word> words);

/// (t,A,p)w: occurrences of p in w whose anchored cells sit exactly at A
/// with exactly the values of t. A is 1-based; |A| must equal |I(t)| and t
/// must be a trace of p (std::invalid_argument otherwise).
Count trace_statistic(const Trace& t, const PositionSet& anchors_at, const Word& pattern, const Word& w);

struct PositionInterval {
    std::size_t first;  // 1-based, inclusive
    std::size_t last;
};

struct ValueInterval {
    Symbol low;
    Symbol high;
};

struct Restriction {
    Word subword;
    std::vector<std::size_t> positions;  // 1-based source positions
};

/// Length-maximal subword of w_[a,b] with entries in [c,d].
/// Requires 1 <= a <= b <= n and c <= d.
Restriction restrict_word(const Word& w, PositionInterval where, ValueInterval values);

/// Rewrites the entries at `positions` so that they read order-isomorphic
/// with u over the given symbol set (sorted ascending, |symbols| = arity(u)).
Word substitute_at(const Word& w, std::span<const std::size_t> positions, const Word& u,
                   std::span<const Symbol> symbols);

/// The ([a,b],[c,d])-substitution by u in w. u must be a pattern on as many
/// symbols as the restricted subword has, and of the same length.
Word substitute(const Word& w, PositionInterval where, ValueInterval values, const Word& u);

}  // namespace dpat
