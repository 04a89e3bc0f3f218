#include "dpat/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "dpat/fequiv.hpp"

namespace dpat {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

std::string describe(const DClass& c) {
    return "n=" + std::to_string(c.length) + " alphabet=" + format_alphabet(c.alphabet) +
           " descents=" + format_positions(c.descents);
}

std::vector<std::size_t> diff_positions(const Word& p, const Word& s) {
    std::vector<std::size_t> out;
    for (std::size_t l = 0; l < p.size(); ++l)
        if (p[l] != s[l]) out.push_back(l + 1);
    return out;
}

std::size_t count_of(const Word& w, Symbol x) { return static_cast<std::size_t>(std::count(w.begin(), w.end(), x)); }

// Runs task(k) for k in [0, count) on up to `jobs` threads. Results land in
// slot k, so the merge order never depends on scheduling.
template <class Result, class Task>
std::vector<Result> run_indexed(std::size_t count, unsigned jobs, Task task) {
    std::vector<Result> out(count);
    if (jobs <= 1 || count <= 1) {
        for (std::size_t k = 0; k < count; ++k) out[k] = task(k);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    auto worker = [&]() {
        for (std::size_t k = next++; k < count; k = next++) {
            try {
                out[k] = task(k);
            } catch (...) {
                std::lock_guard lock(error_mu);
                if (!error) error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    const unsigned n = std::min<unsigned>(jobs, static_cast<unsigned>(count));
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
    return out;
}

struct Partial {
    std::size_t checked = 0;
    std::string witness;
};

// Patterns up to max_length grouped by d-class; singleton groups dropped.
std::vector<std::vector<Word>> d_equivalence_groups(std::size_t max_length) {
    std::map<DClass, std::vector<Word>> groups;
    for (std::size_t k = 1; k <= max_length; ++k)
        for (auto& p : all_patterns(k)) groups[class_of(p)].push_back(p);
    std::vector<std::vector<Word>> out;
    for (auto& [cls, members] : groups)
        if (members.size() > 1) out.push_back(std::move(members));
    return out;
}

// Compares every member of each group against its first member on `words`.
Partial compare_groups(std::span<const Word> words, const std::vector<std::vector<Word>>& groups,
                       const std::string& where) {
    Partial out;
    const std::size_t n = words.empty() ? 0 : words.front().size();
    for (const auto& group : groups) {
        if (group.front().size() > n) continue;
        const Count base = popularity(group.front(), words);
        for (std::size_t m = 1; m < group.size(); ++m) {
            ++out.checked;
            const Count other = popularity(group[m], words);
            if (other != base && out.witness.empty())
                out.witness = format_word(group.front()) + " vs " + format_word(group[m]) + " on " + where + ": " +
                              std::to_string(base) + " != " + std::to_string(other);
        }
    }
    return out;
}

Partial compare_pairs(std::span<const Word> words, const std::vector<std::pair<Word, Word>>& pairs,
                      const std::string& where) {
    Partial out;
    const std::size_t n = words.empty() ? 0 : words.front().size();
    for (const auto& [p, s] : pairs) {
        if (p.size() > n) continue;
        ++out.checked;
        const Count a = popularity(p, words);
        const Count b = popularity(s, words);
        if (a != b && out.witness.empty())
            out.witness = format_word(p) + " vs " + format_word(s) + " on " + where + ": " + std::to_string(a) +
                          " != " + std::to_string(b);
    }
    return out;
}

Report merge(Report r, const std::vector<Partial>& parts) {
    for (const auto& part : parts) {
        r.checked += part.checked;
        if (!part.witness.empty() && r.holds) {
            r.holds = false;
            r.witness = part.witness;
        }
    }
    return r;
}

void add_bounds(Report& r, const SweepBounds& b) {
    r.params.emplace_back("max_n", std::to_string(b.max_n));
    r.params.emplace_back("max_q", std::to_string(b.max_q));
    if (b.max_class_size != 0) r.params.emplace_back("max_class_size", std::to_string(b.max_class_size));
}

std::vector<PositionSet> all_descent_sets(std::size_t n) {
    std::vector<PositionSet> out;
    const std::uint64_t limit = n == 0 ? 1 : (std::uint64_t{1} << (n - 1));
    for (std::uint64_t m = 0; m < limit; ++m) out.push_back(PositionSet::from_mask(m));
    return out;
}

Report equipopularity_over_classes(std::string claim, const Word& p, const Word& s, const SweepBounds& bounds) {
    const auto start = Clock::now();
    Report r;
    r.claim = std::move(claim);
    r.params = {{"p", format_word(p)}, {"s", format_word(s)}};
    add_bounds(r, bounds);
    const auto classes = classes_within(bounds);
    const std::vector<std::pair<Word, Word>> pair{{p, s}};
    auto parts = run_indexed<Partial>(classes.size(), bounds.jobs, [&](std::size_t k) {
        const auto words = enumerate_class(classes[k]);
        return compare_pairs(words, pair, describe(classes[k]));
    });
    r = merge(std::move(r), parts);
    r.seconds = since(start);
    return r;
}

}  // namespace

Histogram distribution(const TraceSpec& spec, std::span<const Word> words) {
    Histogram h;
    for (const auto& w : words) ++h[trace_statistic(spec.t, spec.anchors_at, spec.pattern, w)];
    return h;
}

Histogram distribution(const TraceSpec& spec, const DClass& c) {
    const auto words = enumerate_class(c);
    return distribution(spec, words);
}

Histogram occurrence_distribution(const Word& pattern, std::span<const Word> words) {
    Histogram h;
    for (const auto& w : words) ++h[occurrences_count(pattern, w)];
    return h;
}

Report verify_equipopularity(const Word& p, const Word& s, const DClass& c) {
    const auto start = Clock::now();
    Report r;
    r.claim = "equipopularity";
    r.params = {{"p", format_word(p)}, {"s", format_word(s)}, {"class", describe(c)}};
    const auto words = enumerate_class(c);
    const Count a = popularity(p, words);
    const Count b = popularity(s, words);
    r.params.emplace_back("popularity_p", std::to_string(a));
    r.params.emplace_back("popularity_s", std::to_string(b));
    r.checked = words.size();
    if (a != b) {
        r.holds = false;
        r.witness = describe(c) + ": " + std::to_string(a) + " != " + std::to_string(b);
    }
    r.seconds = since(start);
    return r;
}

std::optional<DClass> find_separating_class(const Word& p, const Word& s) {
    if (!is_pattern(p) || !is_pattern(s)) throw std::invalid_argument("find_separating_class expects patterns");
    if (d_equivalent(p, s))
        throw std::invalid_argument(format_word(p) + " and " + format_word(s) + " are d-equivalent");
    // The shorter pattern lies in its own class; the other one cannot occur
    // there (too long, or equal to a reduced word with another descent set
    // or alphabet).
    const DClass c = class_of(s.size() < p.size() ? s : p);
    const auto words = enumerate_class(c);
    if (popularity(p, words) == popularity(s, words))
        throw std::logic_error("no separation of " + format_word(p) + " and " + format_word(s) + " on " +
                               describe(c));
    return c;
}

std::vector<Word> permutations_with_descents(std::size_t n, const PositionSet& descents) {
    Alphabet a;
    for (std::size_t x = 1; x <= n; ++x) a.insert(static_cast<Symbol>(x));
    if (n == 0) return {Word{}};
    return enumerate_class({n, a, descents});
}

Report verify_descent_equipopularity(const Word& p, const Word& s, std::size_t n, Symbol q,
                                     const PositionSet& descents) {
    const auto start = Clock::now();
    Report r;
    r.claim = "descent-class equipopularity";
    r.params = {{"p", format_word(p)},
                {"s", format_word(s)},
                {"n", std::to_string(n)},
                {"q", std::to_string(q)},
                {"descents", format_positions(descents)}};
    const auto words = enumerate_descent_class(n, q, descents);
    const Count a = popularity(p, words);
    const Count b = popularity(s, words);
    r.params.emplace_back("popularity_p", std::to_string(a));
    r.params.emplace_back("popularity_s", std::to_string(b));
    r.checked = words.size();
    if (a != b) {
        r.holds = false;
        r.witness = std::to_string(a) + " != " + std::to_string(b);
    }
    r.seconds = since(start);
    return r;
}

Report verify_permutation_equipopularity(const Word& p, const Word& s, std::size_t n, const PositionSet& descents) {
    const auto start = Clock::now();
    Report r;
    r.claim = "permutation equipopularity";
    r.params = {{"p", format_word(p)}, {"s", format_word(s)}, {"n", std::to_string(n)},
                {"descents", format_positions(descents)}};
    const auto words = permutations_with_descents(n, descents);
    const Count a = popularity(p, words);
    const Count b = popularity(s, words);
    r.params.emplace_back("popularity_p", std::to_string(a));
    r.params.emplace_back("popularity_s", std::to_string(b));
    r.checked = words.size();
    if (a != b) {
        r.holds = false;
        r.witness = std::to_string(a) + " != " + std::to_string(b);
    }
    r.seconds = since(start);
    return r;
}

Table1 reproduce_table1() {
    Table1 table;
    table.cls = {8, {1, 2, 3, 4, 5}, {2, 3, 5, 6, 7}};
    const Trace t = parse_trace("_44_");
    table.spec_p = {t, {3, 6}, parse_word("1332")};
    table.spec_s = {t, {3, 6}, parse_word("2331")};
    for_each_in_class(table.cls, [&](const Word& w) {
        ++table.class_size;
        const Count a = trace_statistic(t, table.spec_p.anchors_at, table.spec_p.pattern, w);
        const Count b = trace_statistic(t, table.spec_s.anchors_at, table.spec_s.pattern, w);
        ++table.hist_p[a];
        ++table.hist_s[b];
        if (a != 0 || b != 0) table.rows.push_back({w, a, b});
    });
    return table;
}

Table2 reproduce_table2() {
    Table2 table;
    table.p = parse_word("213");
    table.s = parse_word("312");
    table.n = 5;
    table.descents = {1, 4};
    const auto words = permutations_with_descents(table.n, table.descents);
    table.class_size = words.size();
    for (const auto& w : words) {
        const Count a = occurrences_count(table.p, w);
        const Count b = occurrences_count(table.s, w);
        table.popularity_p += a;
        table.popularity_s += b;
        ++table.hist_p[a];
        ++table.hist_s[b];
        if (a != 0 || b != 0) table.rows.push_back({w, a, b});
    }
    return table;
}

namespace {

std::string aligned(const std::vector<std::vector<std::string>>& cells) {
    std::vector<std::size_t> width;
    for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (width.size() <= c) width.push_back(0);
            width[c] = std::max(width[c], row[c].size());
        }
    std::ostringstream out;
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c != 0) out << "  ";
            out << (c == 0 ? std::left : std::right) << std::setw(static_cast<int>(width[c])) << row[c];
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace

std::string format_table(const Table1& table) {
    const std::string head_p = "(" + format_trace(table.spec_p.t) + ",{" + format_positions(table.spec_p.anchors_at) +
                               "}," + format_word(table.spec_p.pattern) + ")w";
    const std::string head_s = "(" + format_trace(table.spec_s.t) + ",{" + format_positions(table.spec_s.anchors_at) +
                               "}," + format_word(table.spec_s.pattern) + ")w";
    std::vector<std::vector<std::string>> cells{{"w", head_p, head_s}};
    for (const auto& row : table.rows)
        cells.push_back({format_word(row.w), std::to_string(row.stat_p), std::to_string(row.stat_s)});
    cells.push_back({"...", "0", "0"});
    std::string out = "class " + describe(table.cls) + " (" + std::to_string(table.class_size) + " words)\n";
    return out + aligned(cells);
}

std::string format_table(const Table2& table) {
    std::vector<std::vector<std::string>> cells{
        {"w", "(" + format_word(table.p) + ")w", "(" + format_word(table.s) + ")w"}};
    for (const auto& row : table.rows)
        cells.push_back({format_word(row.w), std::to_string(row.count_p), std::to_string(row.count_s)});
    cells.push_back({"...", "0", "0"});
    cells.push_back({"popularity", std::to_string(table.popularity_p), std::to_string(table.popularity_s)});
    std::string out = "permutations n=" + std::to_string(table.n) + " descents=" + format_positions(table.descents) +
                      " (" + std::to_string(table.class_size) + " words)\n";
    return out + aligned(cells);
}

std::vector<DClass> classes_within(const SweepBounds& bounds) {
    std::vector<DClass> out;
    for (std::size_t n = 1; n <= bounds.max_n; ++n)
        for (auto& c : all_classes(n, bounds.max_q))
            if (bounds.max_class_size == 0 || class_size(c) <= bounds.max_class_size) out.push_back(std::move(c));
    return out;
}

bool theorem3_shape(const Word& p, const Word& s) {
    if (!is_pattern(p) || !is_pattern(s) || p.size() != s.size() || !d_equivalent(p, s)) return false;
    const auto diff = diff_positions(p, s);
    return diff.size() == 1 && s[diff[0] - 1] == p[diff[0] - 1] + 1;
}

bool theorem4_shape(const Word& p, const Word& s) {
    if (!is_pattern(p) || !is_pattern(s) || p.size() != s.size() || !d_equivalent(p, s)) return false;
    const auto diff = diff_positions(p, s);
    if (diff.size() != 2) return false;
    const std::size_t i = diff[0] - 1;
    const std::size_t j = diff[1] - 1;
    if (p[i] != s[j] || p[j] != s[i]) return false;
    return p[j] == p[i] + 1 || p[i] == p[j] + 1;
}

std::optional<Word> theorem4_bridge(const Word& p, const Word& s) {
    if (!theorem4_shape(p, s)) throw std::invalid_argument("pair does not exchange two consecutive values");
    auto diff = diff_positions(p, s);
    // Name the positions so that p_j = p_i + 1.
    std::size_t i = diff[0] - 1;
    std::size_t j = diff[1] - 1;
    if (p[i] > p[j]) std::swap(i, j);
    std::vector<Symbol> tau(p.begin(), p.end());
    if (count_of(p, p[i]) >= 2) {
        tau[i] = p[i] + 1;
    } else if (count_of(p, p[j]) >= 2) {
        tau[j] = p[j] - 1;
    } else {
        return std::nullopt;
    }
    return Word(std::move(tau));
}

Report verify_theorem3(const Word& p, const Word& s, const SweepBounds& bounds) {
    if (!theorem3_shape(p, s))
        throw std::invalid_argument(format_word(p) + ", " + format_word(s) + " do not differ by one unit step");
    return equipopularity_over_classes("theorem3", p, s, bounds);
}

Report verify_theorem4(const Word& p, const Word& s, const SweepBounds& bounds) {
    const auto start = Clock::now();
    const auto bridge = theorem4_bridge(p, s);
    Report r = equipopularity_over_classes("theorem4", p, s, bounds);
    if (!bridge) {
        r.params.emplace_back("branch", "both values once");
        return r;
    }
    r.params.emplace_back("branch", "bridge " + format_word(*bridge));
    if (!d_equivalent(*bridge, p) || !d_equivalent(*bridge, s)) {
        r.holds = false;
        r.witness = "bridge " + format_word(*bridge) + " is not d-equivalent to both patterns";
    } else if (r.holds) {
        const Report via = equipopularity_over_classes("theorem4", p, *bridge, bounds);
        if (!via.holds) {
            r.holds = false;
            r.witness = "bridge: " + via.witness;
        }
    }
    r.seconds = since(start);
    return r;
}

Report sweep_d_equivalent_pairs(const SweepBounds& bounds) {
    const auto start = Clock::now();
    Report r;
    r.claim = "d-equivalent patterns are equipopular";
    r.params.emplace_back("max_pattern_length", std::to_string(bounds.max_pattern_length));
    add_bounds(r, bounds);
    const auto groups = d_equivalence_groups(bounds.max_pattern_length);
    const auto classes = classes_within(bounds);
    auto parts = run_indexed<Partial>(classes.size(), bounds.jobs, [&](std::size_t k) {
        const auto words = enumerate_class(classes[k]);
        return compare_groups(words, groups, describe(classes[k]));
    });
    r = merge(std::move(r), parts);
    r.params.emplace_back("classes", std::to_string(classes.size()));
    r.seconds = since(start);
    return r;
}

Report sweep_f_neighbors(const SweepBounds& bounds) {
    const auto start = Clock::now();
    Report r;
    r.claim = "f-neighbors are equipopular";
    r.params.emplace_back("max_pattern_length", std::to_string(bounds.max_pattern_length));
    add_bounds(r, bounds);
    std::vector<std::pair<Word, Word>> pairs;
    for (std::size_t k = 1; k <= bounds.max_pattern_length; ++k)
        for (const auto& p : all_patterns(k))
            for (auto& s : f_neighbors(p))
                if (p < s) pairs.emplace_back(p, std::move(s));
    const auto classes = classes_within(bounds);
    auto parts = run_indexed<Partial>(classes.size(), bounds.jobs, [&](std::size_t k) {
        const auto words = enumerate_class(classes[k]);
        return compare_pairs(words, pairs, describe(classes[k]));
    });
    r = merge(std::move(r), parts);
    r.params.emplace_back("pairs", std::to_string(pairs.size()));
    r.seconds = since(start);
    return r;
}

Report sweep_descent_classes(const SweepBounds& bounds) {
    const auto start = Clock::now();
    Report r;
    r.claim = "d-equivalent patterns are equipopular on descent classes";
    r.params.emplace_back("max_pattern_length", std::to_string(bounds.max_pattern_length));
    add_bounds(r, bounds);
    const auto groups = d_equivalence_groups(bounds.max_pattern_length);
    std::vector<std::pair<std::size_t, PositionSet>> tasks;
    for (std::size_t n = 1; n <= bounds.max_n; ++n)
        for (const auto& d : all_descent_sets(n)) tasks.emplace_back(n, d);
    auto parts = run_indexed<Partial>(tasks.size(), bounds.jobs, [&](std::size_t k) {
        const auto& [n, d] = tasks[k];
        const auto words = enumerate_descent_class(n, bounds.max_q, d);
        return compare_groups(words, groups,
                              "descent class n=" + std::to_string(n) + " q=" + std::to_string(bounds.max_q) +
                                  " descents=" + format_positions(d));
    });
    r = merge(std::move(r), parts);
    r.seconds = since(start);
    return r;
}

Report sweep_permutation_classes(const SweepBounds& bounds) {
    const auto start = Clock::now();
    Report r;
    r.claim = "d-equivalent patterns are equipopular on permutation descent classes";
    r.params.emplace_back("max_pattern_length", std::to_string(bounds.max_pattern_length));
    r.params.emplace_back("max_n", std::to_string(bounds.max_n));
    const auto groups = d_equivalence_groups(bounds.max_pattern_length);
    std::vector<std::pair<std::size_t, PositionSet>> tasks;
    for (std::size_t n = 1; n <= bounds.max_n; ++n)
        for (const auto& d : all_descent_sets(n)) tasks.emplace_back(n, d);
    auto parts = run_indexed<Partial>(tasks.size(), bounds.jobs, [&](std::size_t k) {
        const auto& [n, d] = tasks[k];
        const auto words = permutations_with_descents(n, d);
        return compare_groups(words, groups,
                              "permutations n=" + std::to_string(n) + " descents=" + format_positions(d));
    });
    r = merge(std::move(r), parts);
    r.seconds = since(start);
    return r;
}

Count trace_decomposition_sum(const Word& p, const Word& w, std::size_t hole) {
    const std::size_t k = p.size();
    const std::size_t n = w.size();
    if (hole < 1 || hole > k) throw std::invalid_argument("hole position outside the pattern");
    if (k == 0 || k > n) return 0;
    Count total = 0;
    std::vector<std::size_t> at;
    // Only t = w_A can contribute for a given A, so the sum over t collapses.
    auto visit = [&]() {
        std::vector<std::optional<Symbol>> cells(k);
        for (std::size_t c = 0, r = 0; c < k; ++c)
            if (c + 1 != hole) cells[c] = w[at[r++] - 1];
        const Trace t(std::move(cells));
        if (!is_trace(t, p)) return;
        total += trace_statistic(t, PositionSet::from_vector(at), p, w);
    };
    std::function<void(std::size_t)> choose = [&](std::size_t from) {
        if (at.size() == k - 1) {
            visit();
            return;
        }
        for (std::size_t pos = from; pos + (k - 1 - at.size()) <= n + 1; ++pos) {
            at.push_back(pos);
            choose(pos + 1);
            at.pop_back();
        }
    };
    choose(1);
    return total;
}

namespace {

template <class Map, class Inverse>
LemmaCheck check_map(const TraceSpec& from, const TraceSpec& to, std::size_t host_length, const DClass& c, Map map,
                     Inverse inverse) {
    if (c.length != host_length) throw std::invalid_argument("class length differs from the instance host length");
    LemmaCheck out;
    const auto words = enumerate_class(c);
    out.class_size = words.size();
    std::vector<bool> hit(words.size(), false);
    auto note = [&](bool& flag, const std::string& what) {
        flag = false;
        if (out.witness.empty()) out.witness = what;
    };
    for (const auto& w : words) {
        const Count a = trace_statistic(from.t, from.anchors_at, from.pattern, w);
        ++out.hist_p[a];
        ++out.hist_s[trace_statistic(to.t, to.anchors_at, to.pattern, w)];
        const Word v = map(w);
        if (v != w) ++out.moved;
        const auto it = std::lower_bound(words.begin(), words.end(), v);
        if (it == words.end() || *it != v) {
            note(out.permutation, format_word(w) + " maps outside the class to " + format_word(v));
            continue;
        }
        auto slot = hit[static_cast<std::size_t>(it - words.begin())];
        if (slot) note(out.permutation, format_word(v) + " is hit twice");
        slot = true;
        if (!d_equivalent(v, w)) note(out.d_preserving, format_word(w) + " -> " + format_word(v));
        if (inverse(v) != w) note(out.round_trip, "inverse fails on " + format_word(v));
        if (trace_statistic(to.t, to.anchors_at, to.pattern, v) != a)
            note(out.transports, format_word(w) + " -> " + format_word(v) + " changes the statistic");
    }
    if (out.hist_p != out.hist_s && out.witness.empty()) out.witness = "histograms differ";
    return out;
}

}  // namespace

LemmaCheck check_lemma1(const Lemma1Instance& inst, const DClass& c) {
    return check_map({inst.t, inst.anchors_at, inst.p}, {inst.t, inst.anchors_at, inst.s}, inst.host_length, c,
                     [&](const Word& w) { return lemma1_map(inst, w); },
                     [&](const Word& v) { return lemma1_inverse(inst, v); });
}

LemmaCheck check_lemma2(const Lemma2Instance& inst, const DClass& c) {
    return check_map({inst.t, inst.anchors_at, inst.p}, {inst.t, inst.anchors_at, inst.s}, inst.host_length, c,
                     [&](const Word& w) { return lemma2_map(inst, w); },
                     [&](const Word& v) { return lemma2_inverse(inst, v); });
}

}  // namespace dpat
