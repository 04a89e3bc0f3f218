#include "dpat/fequiv.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "dpat/canonical.hpp"

namespace dpat {

std::string to_string(StepKind kind) {
    switch (kind) {
        case StepKind::increment: return "increment";
        case StepKind::decrement: return "decrement";
        case StepKind::swap: return "swap";
    }
    return "?";
}

std::string to_string(ReductionRule rule) {
    switch (rule) {
        case ReductionRule::repeated_entry: return "repeated_entry";
        case ReductionRule::swap_with_predecessor: return "swap_with_predecessor";
        case ReductionRule::lower_larger_repeat: return "lower_larger_repeat";
        case ReductionRule::raise_smaller_repeat: return "raise_smaller_repeat";
    }
    return "?";
}

namespace {

void require_pattern(const Word& p) {
    if (!is_pattern(p)) throw std::invalid_argument("not a pattern: " + format_word(p));
}

std::size_t count_of(const std::vector<Symbol>& w, Symbol x) {
    return static_cast<std::size_t>(std::count(w.begin(), w.end(), x));
}

}  // namespace

FStep classify_step(const Word& before, const Word& after) {
    if (before.size() != after.size()) throw std::invalid_argument("f-step between words of different length");
    if (!is_pattern(before) || !is_pattern(after)) throw std::invalid_argument("f-step endpoints must be patterns");
    if (!d_equivalent(before, after))
        throw std::invalid_argument(format_word(before) + " and " + format_word(after) + " are not d-equivalent");
    std::vector<std::size_t> diff;
    for (std::size_t i = 0; i < before.size(); ++i)
        if (before[i] != after[i]) diff.push_back(i + 1);
    if (diff.size() == 1) {
        const Symbol delta = after[diff[0] - 1] - before[diff[0] - 1];
        if (delta == 1) return {StepKind::increment, diff, before, after};
        if (delta == -1) return {StepKind::decrement, diff, before, after};
    } else if (diff.size() == 2) {
        const Symbol x = before[diff[0] - 1];
        const Symbol y = before[diff[1] - 1];
        if (after[diff[0] - 1] == y && after[diff[1] - 1] == x && (x - y == 1 || y - x == 1))
            return {StepKind::swap, diff, before, after};
    }
    throw std::invalid_argument(format_word(after) + " is not an f-transformation of " + format_word(before));
}

bool is_f_transformation(const Word& before, const Word& after) {
    try {
        classify_step(before, after);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

std::vector<Word> f_neighbors(const Word& pattern) {
    require_pattern(pattern);
    std::set<Word> out;
    const auto d = descent_set(pattern);
    const auto alphabet = underlying_alphabet(pattern);
    std::vector<Symbol> buf(pattern.begin(), pattern.end());
    auto consider = [&]() {
        if (std::any_of(buf.begin(), buf.end(), [](Symbol x) { return x < 1; })) return;
        Word cand(buf);
        if (cand != pattern && descent_set(cand) == d && underlying_alphabet(cand) == alphabet) out.insert(cand);
    };
    for (std::size_t i = 0; i < buf.size(); ++i) {
        for (Symbol delta : {-1, 1}) {
            buf[i] += delta;
            consider();
            buf[i] -= delta;
        }
        for (std::size_t j = i + 1; j < buf.size(); ++j) {
            if (buf[i] - buf[j] != 1 && buf[j] - buf[i] != 1) continue;
            std::swap(buf[i], buf[j]);
            consider();
            std::swap(buf[i], buf[j]);
        }
    }
    return {out.begin(), out.end()};
}

ReductionStep lex_reduce_step(const Word& pattern) {
    require_pattern(pattern);
    const Word target = beta_of(pattern);
    if (pattern == target) throw std::logic_error(format_word(pattern) + " is already lexicographically minimal");

    const auto b = descent_word(pattern);
    const auto order = cover_order(b);  // positions in cover order
    const Word om = omega(b);           // om[pos-1] = rank of pos
    const auto run_list = runs(b);
    const auto run_of = run_index(run_list, pattern.size());
    const auto rank = [&](std::size_t pos) { return om[pos - 1]; };

    std::size_t i = 0;
    while (pattern[order[i] - 1] == target[order[i] - 1]) ++i;
    const std::size_t pos = order[i];
    const Symbol v = pattern[pos - 1];
    if (v <= target[pos - 1]) throw std::logic_error("first departure from beta is not an excess");

    std::vector<Symbol> cur(pattern.begin(), pattern.end());
    ReductionStep out{pattern, {}, ReductionRule::repeated_entry};
    auto push = [&]() {
        Word next(cur);
        out.steps.push_back(classify_step(out.result, next));
        out.result = std::move(next);
    };
    const std::vector<std::size_t> later(order.begin() + static_cast<std::ptrdiff_t>(i) + 1, order.end());
    auto latest_with = [&](Symbol value) {
        std::size_t best = 0;
        for (auto p : later)
            if (cur[p - 1] == value && (best == 0 || rank(p) > rank(best))) best = p;
        return best;
    };

    if (count_of(cur, v) >= 2) {
        cur[pos - 1] = v - 1;
        push();
    } else if (const std::size_t a = latest_with(v - 1); a != 0) {
        out.rule = ReductionRule::swap_with_predecessor;
        std::swap(cur[pos - 1], cur[a - 1]);
        push();
    } else {
        // Smallest value above v that occurs later and is repeated.
        Symbol larger = 0;
        for (auto p : later) {
            const Symbol x = cur[p - 1];
            if (x > v && count_of(cur, x) >= 2 && (larger == 0 || x < larger)) larger = x;
        }
        if (larger != 0) {
            out.rule = ReductionRule::lower_larger_repeat;
            std::vector<std::size_t> copies;
            for (std::size_t p = 1; p <= cur.size(); ++p)
                if (cur[p - 1] == larger) copies.push_back(p);
            std::sort(copies.begin(), copies.end(), [&](auto x, auto y) { return rank(x) < rank(y); });
            std::size_t below = 0;
            for (std::size_t p = 1; p <= cur.size(); ++p)
                if (cur[p - 1] == larger - 1) {
                    if (below != 0) throw std::logic_error("entry below the repeated value is not unique");
                    below = p;
                }
            if (below == 0) throw std::logic_error("entry below the repeated value is missing");
            const bool same_descent_run = run_of[copies[0] - 1] == run_of[below - 1] &&
                                          run_list[run_of[below - 1]].kind == RunKind::descent;
            const std::size_t a = same_descent_run ? copies.at(1) : copies[0];
            cur[a - 1] -= 1;
            push();
        } else {
            out.rule = ReductionRule::raise_smaller_repeat;
            Symbol smaller = 0;
            for (auto p : later)
                if (cur[p - 1] < v) smaller = std::max(smaller, cur[p - 1]);
            if (smaller == 0) throw std::logic_error("no reduction rule applies to " + format_word(pattern));
            if (count_of(cur, smaller) < 2) throw std::logic_error("lifted entry is not repeated");
            const std::size_t a = latest_with(smaller);
            while (cur[a - 1] < v - 1) {
                cur[a - 1] += 1;
                push();
            }
            std::swap(cur[pos - 1], cur[a - 1]);
            push();
        }
    }
    if (!(out.result < pattern)) throw std::logic_error("reduction did not decrease " + format_word(pattern));
    return out;
}

std::vector<FStep> f_path_steps(const Word& pattern) {
    require_pattern(pattern);
    const Word target = beta_of(pattern);
    std::size_t budget = 0;
    if (pattern.size() <= 10) budget = class_size(class_of(pattern));
    std::vector<FStep> steps;
    Word cur = pattern;
    std::size_t reductions = 0;
    while (cur != target) {
        auto r = lex_reduce_step(cur);
        if (budget != 0 && ++reductions > budget)
            throw std::logic_error("f-path exceeded the class-size step budget");
        steps.insert(steps.end(), r.steps.begin(), r.steps.end());
        cur = std::move(r.result);
    }
    return steps;
}

std::vector<Word> f_path_to_beta(const Word& pattern) {
    std::vector<Word> path{pattern};
    for (auto& s : f_path_steps(pattern)) path.push_back(std::move(s.after));
    return path;
}

bool f_equivalent(const Word& p, const Word& s) {
    require_pattern(p);
    require_pattern(s);
    if (p.size() != s.size() || p.arity() != s.arity()) return false;
    return beta_of(p) == beta_of(s);
}

bool f_equivalent_bfs(const Word& p, const Word& s, std::size_t max_length) {
    require_pattern(p);
    require_pattern(s);
    if (p.size() != s.size()) return false;
    if (p.size() > max_length)
        throw std::length_error("BFS oracle is bounded to length " + std::to_string(max_length));
    std::set<Word> seen{p};
    std::deque<Word> queue{p};
    while (!queue.empty()) {
        Word cur = std::move(queue.front());
        queue.pop_front();
        if (cur == s) return true;
        for (auto& nb : f_neighbors(cur))
            if (seen.insert(nb).second) queue.push_back(std::move(nb));
    }
    return false;
}

}  // namespace dpat
