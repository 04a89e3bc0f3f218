#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dpat/word.hpp"

namespace dpat {

enum class StepKind { increment, decrement, swap };

std::string to_string(StepKind kind);

/// One f-transformation: a unit change of one entry, or the exchange of two
/// entries with consecutive values, between d-equivalent patterns.
struct FStep {
    StepKind kind;
    std::vector<std::size_t> positions;  // 1-based; one or two entries
    Word before;
    Word after;

    friend bool operator==(const FStep&, const FStep&) = default;
};

/// Which argument of the constructive reduction produced a step batch.
enum class ReductionRule {
    repeated_entry,        // decrement an entry that occurs at least twice
    swap_with_predecessor, // exchange with a later copy of (entry - 1)
    lower_larger_repeat,   // no later (entry - 1): decrement a larger repeated entry
    raise_smaller_repeat,  // no later (entry - 1): lift a smaller later entry, then swap
};

std::string to_string(ReductionRule rule);

struct ReductionStep {
    Word result;
    std::vector<FStep> steps;
    ReductionRule rule;
};

/// Checks shape and d-equivalence; returns the step or throws
/// std::invalid_argument when `after` is not an f-transformation of `before`.
FStep classify_step(const Word& before, const Word& after);
bool is_f_transformation(const Word& before, const Word& after);

/// All patterns one f-transformation away (self excluded), sorted.
std::vector<Word> f_neighbors(const Word& pattern);

/// One lexicographic reduction toward beta_of(p). Looks at the first
/// position, in cover order, where p departs from beta_of(p), then picks the
/// rule by multiplicity of that entry. The returned chain may rise
/// temporarily (rule raise_smaller_repeat) but ends strictly below p.
/// Throws std::logic_error when p already equals beta_of(p).
ReductionStep lex_reduce_step(const Word& pattern);

/// p = tau_1, ..., tau_m = beta_of(p), consecutive entries f-related.
std::vector<Word> f_path_to_beta(const Word& pattern);
std::vector<FStep> f_path_steps(const Word& pattern);

/// Compares canonical representatives.
bool f_equivalent(const Word& p, const Word& s);

/// Breadth-first reachability over f_neighbors. Independent of the
/// canonical forms; bounded to length <= max_length (std::length_error).
bool f_equivalent_bfs(const Word& p, const Word& s, std::size_t max_length = 6);

}  // namespace dpat
