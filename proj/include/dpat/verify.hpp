#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dpat/lemma.hpp"
#include "dpat/occurrence.hpp"
#include "dpat/word.hpp"

namespace dpat {

/// statistic value -> number of words attaining it.
using Histogram = std::map<Count, std::size_t>;

struct TraceSpec {
    Trace t;
    PositionSet anchors_at;
    Word pattern;
};

Histogram distribution(const TraceSpec& spec, std::span<const Word> words);
Histogram distribution(const TraceSpec& spec, const DClass& c);
/// Histogram of the plain occurrence count (pattern)w.
Histogram occurrence_distribution(const Word& pattern, std::span<const Word> words);

/// Outcome of one bounded verification. A failing report always names a
/// witness that can be replayed from the CLI.
struct Report {
    std::string claim;
    std::vector<std::pair<std::string, std::string>> params;
    bool holds = true;
    std::string witness;
    std::size_t checked = 0;  // classes, words or pairs, depending on the claim
    double seconds = 0.0;
};

Report verify_equipopularity(const Word& p, const Word& s, const DClass& c);

/// Class on which p and s have different popularity: the class of the
/// shorter pattern (of p on a tie). Throws std::invalid_argument when p and
/// s are d-equivalent, std::logic_error if the popularities agree there.
std::optional<DClass> find_separating_class(const Word& p, const Word& s);

Report verify_descent_equipopularity(const Word& p, const Word& s, std::size_t n, Symbol q,
                                     const PositionSet& descents);
/// Same over permutations of length n with the given descent set.
Report verify_permutation_equipopularity(const Word& p, const Word& s, std::size_t n, const PositionSet& descents);

/// Words of length n over {1..n} with distinct entries and descent set S.
std::vector<Word> permutations_with_descents(std::size_t n, const PositionSet& descents);

struct Table1Row {
    Word w;
    Count stat_p;
    Count stat_s;
};

struct Table1 {
    DClass cls;
    TraceSpec spec_p;
    TraceSpec spec_s;
    std::size_t class_size = 0;
    std::vector<Table1Row> rows;  // words with a nonzero statistic, lexicographic
    Histogram hist_p;
    Histogram hist_s;
};

struct Table2Row {
    Word w;
    Count count_p;
    Count count_s;
};

struct Table2 {
    Word p;
    Word s;
    std::size_t n = 0;
    PositionSet descents;
    std::size_t class_size = 0;
    std::vector<Table2Row> rows;  // words with a nonzero count, lexicographic
    Count popularity_p = 0;
    Count popularity_s = 0;
    Histogram hist_p;
    Histogram hist_s;
};

/// Length 8, alphabet 1..5, descents {2,3,5,6,7}; t=_44_, A={3,6}; 1332 vs 2331.
Table1 reproduce_table1();
/// Permutations of length 5 with descents {1,4}; 213 vs 312.
Table2 reproduce_table2();
std::string format_table(const Table1& table);
std::string format_table(const Table2& table);

struct SweepBounds {
    std::size_t max_n = 6;
    Symbol max_q = 4;
    std::size_t max_pattern_length = 4;
    std::size_t max_class_size = 0;  // 0: no cap
    unsigned jobs = 1;
};

/// Every class of length <= max_n over an alphabet inside [max_q], sorted.
std::vector<DClass> classes_within(const SweepBounds& bounds);

/// Theorem-3 shape: d-equivalent, equal except s_i = p_i + 1 at one i.
bool theorem3_shape(const Word& p, const Word& s);
/// Theorem-4 shape: d-equivalent, equal except p_i = s_j, p_j = s_i with
/// p_j = p_i + 1.
bool theorem4_shape(const Word& p, const Word& s);

/// Intermediate pattern of the occurs-twice branch of the exchange check (none when
/// both exchanged values occur once).
std::optional<Word> theorem4_bridge(const Word& p, const Word& s);

/// Equipopularity over every class within bounds; throws
/// std::invalid_argument when the pair does not have the theorem's shape.
Report verify_theorem3(const Word& p, const Word& s, const SweepBounds& bounds);
Report verify_theorem4(const Word& p, const Word& s, const SweepBounds& bounds);

/// All d-equivalent pattern pairs up to max_pattern_length over all classes
/// within bounds. One report; the witness names the first failure in
/// (class, pair) order.
Report sweep_d_equivalent_pairs(const SweepBounds& bounds);
/// Every f-neighbor pair up to max_pattern_length.
Report sweep_f_neighbors(const SweepBounds& bounds);
/// Descent classes (any alphabet inside [q]) of length <= max_n.
Report sweep_descent_classes(const SweepBounds& bounds);
/// Permutations of length <= max_n, every descent set.
Report sweep_permutation_classes(const SweepBounds& bounds);

/// Sum over hole-free positions: sum_A sum_t (t,A,p)w with t having its only
/// hole at `hole` (1-based). Equals (p)w.
Count trace_decomposition_sum(const Word& p, const Word& w, std::size_t hole);

/// Exhaustive check of a lemma map over one class.
struct LemmaCheck {
    std::size_t class_size = 0;
    std::size_t moved = 0;  // words not fixed by the map
    bool permutation = true;
    bool round_trip = true;
    bool d_preserving = true;
    bool transports = true;
    Histogram hist_p;
    Histogram hist_s;
    std::string witness;
    bool ok() const { return permutation && round_trip && d_preserving && transports && hist_p == hist_s; }
};

LemmaCheck check_lemma1(const Lemma1Instance& inst, const DClass& c);
LemmaCheck check_lemma2(const Lemma2Instance& inst, const DClass& c);

}  // namespace dpat
