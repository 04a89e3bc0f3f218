#include "dpat/occurrence.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace dpat {

namespace {

int sign(Symbol a, Symbol b) { return (a > b) - (a < b); }

// Shared recursion for plain and anchored counting. `fixed[m]` is the
// 1-based host position pinned for pattern index m, or 0 when free.
class OccurrenceSearch {
public:
    OccurrenceSearch(const Word& pattern, const Word& w, std::vector<std::size_t> fixed,
                     const std::function<void(std::span<const std::size_t>)>* visit)
        : p_(pattern), w_(w), fixed_(std::move(fixed)), visit_(visit), chosen_(pattern.size(), 0) {
        // Upper bound for a free index: just before the next pinned position.
        limit_.assign(p_.size(), w_.size());
        std::size_t next = w_.size() + 1;
        for (std::size_t m = p_.size(); m-- > 0;) {
            limit_[m] = next - 1;
            if (fixed_[m] != 0) next = fixed_[m];
        }
    }

    Count run() {
        if (p_.size() > w_.size()) return 0;
        return step(0, 0);
    }

private:
    bool consistent(std::size_t m, std::size_t pos) const {
        const Symbol x = w_[pos - 1];
        for (std::size_t r = 0; r < m; ++r)
            if (sign(x, w_[chosen_[r] - 1]) != sign(p_[m], p_[r])) return false;
        return true;
    }

    Count step(std::size_t m, std::size_t prev) {
        if (m == p_.size()) {
            if (visit_) (*visit_)(std::span<const std::size_t>(chosen_));
            return 1;
        }
        Count total = 0;
        auto take = [&](std::size_t pos) {
            if (!consistent(m, pos)) return;
            chosen_[m] = pos;
            total += step(m + 1, pos);
        };
        if (fixed_[m] != 0) {
            if (fixed_[m] > prev) take(fixed_[m]);
            return total;
        }
        const std::size_t last = limit_[m];
        for (std::size_t pos = prev + 1; pos <= last; ++pos) take(pos);
        return total;
    }

    const Word& p_;
    const Word& w_;
    std::vector<std::size_t> fixed_;
    std::vector<std::size_t> limit_;
    const std::function<void(std::span<const std::size_t>)>* visit_;
    std::vector<std::size_t> chosen_;
};

void require_pattern(const Word& p) {
    if (!is_pattern(p)) throw std::invalid_argument("not a pattern: " + format_word(p));
}

}  // namespace

Trace::Trace(std::vector<std::optional<Symbol>> cells) : cells_(std::move(cells)) {
    for (const auto& c : cells_)
        if (c && *c < 1) throw std::invalid_argument("trace symbols must be positive");
}

Trace Trace::all_holes(std::size_t k) { return Trace(std::vector<std::optional<Symbol>>(k)); }

std::vector<std::size_t> Trace::anchors() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < cells_.size(); ++i)
        if (cells_[i]) out.push_back(i + 1);
    return out;
}

std::size_t Trace::hole_count() const noexcept {
    return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), std::nullopt));
}

Word Trace::anchored_word() const {
    std::vector<Symbol> out;
    for (const auto& c : cells_)
        if (c) out.push_back(*c);
    return Word(std::move(out));
}

Trace parse_trace(const std::string& text) {
    std::vector<std::optional<Symbol>> cells;
    if (text.find(',') != std::string::npos) {
        std::stringstream ss(text);
        std::string part;
        while (std::getline(ss, part, ',')) {
            if (part == "_") {
                cells.emplace_back();
            } else {
                std::size_t used = 0;
                long v = 0;
                try {
                    v = std::stol(part, &used);
                } catch (const std::exception&) {
                    used = 0;
                }
                if (used == 0 || used != part.size()) throw std::invalid_argument("bad trace cell: '" + part + "'");
                cells.emplace_back(static_cast<Symbol>(v));
            }
        }
    } else {
        for (char ch : text) {
            if (ch == '_') {
                cells.emplace_back();
            } else if (ch >= '1' && ch <= '9') {
                cells.emplace_back(ch - '0');
            } else if (ch != ' ') {
                throw std::invalid_argument("bad trace syntax: '" + text + "'");
            }
        }
    }
    return Trace(std::move(cells));
}

std::string format_trace(const Trace& t) {
    const bool digits = std::all_of(t.cells().begin(), t.cells().end(), [](const auto& c) { return !c || *c <= 9; });
    std::ostringstream os;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (!digits && i > 0) os << ',';
        if (t.is_hole(i)) {
            os << '_';
        } else {
            os << t.value(i);
        }
    }
    return os.str();
}

bool is_trace(const Trace& t, const Word& pattern) {
    if (t.size() != pattern.size()) return false;
    std::vector<Symbol> sub;
    for (auto a : t.anchors()) sub.push_back(pattern[a - 1]);
    return order_isomorphic(t.anchored_word(), Word(std::move(sub)));
}

void for_each_occurrence(const Word& pattern, const Word& w,
                         const std::function<void(std::span<const std::size_t>)>& visit) {
    require_pattern(pattern);
    OccurrenceSearch(pattern, w, std::vector<std::size_t>(pattern.size(), 0), &visit).run();
}

Count occurrences_count(const Word& pattern, const Word& w) {
    require_pattern(pattern);
    return OccurrenceSearch(pattern, w, std::vector<std::size_t>(pattern.size(), 0), nullptr).run();
}

Count occurrences_count_dp(const Word& pattern, const Word& w) {
    require_pattern(pattern);
    const std::size_t k = pattern.size();
    const std::size_t n = w.size();
    if (k > n) return 0;
    // bound[s] = host value bound to pattern symbol s (0 = unbound).
    using State = std::tuple<std::size_t, std::size_t, std::vector<Symbol>>;
    std::map<State, Count> memo;
    std::function<Count(std::size_t, std::size_t, std::vector<Symbol>&)> go =
        [&](std::size_t j, std::size_t m, std::vector<Symbol>& bound) -> Count {
        if (m == k) return 1;
        if (n - j < k - m) return 0;
        State key{j, m, bound};
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        Count total = go(j + 1, m, bound);
        const Symbol s = pattern[m];
        const Symbol x = w[j];
        bool ok = true;
        for (std::size_t r = 1; r < bound.size() && ok; ++r)
            if (bound[r] != 0) ok = sign(x, bound[r]) == sign(s, static_cast<Symbol>(r));
        if (ok) {
            const Symbol saved = bound[static_cast<std::size_t>(s)];
            bound[static_cast<std::size_t>(s)] = x;
            total += go(j + 1, m + 1, bound);
            bound[static_cast<std::size_t>(s)] = saved;
        }
        memo.emplace(std::move(key), total);
        return total;
    };
    std::vector<Symbol> bound(static_cast<std::size_t>(pattern.arity()) + 1, 0);
    return go(0, 0, bound);
}

Count popularity(const Word& pattern, const DClass& c) {
    require_pattern(pattern);
    Count total = 0;
    for_each_in_class(c, [&](const Word& w) { total += occurrences_count(pattern, w); });
    return total;
}

Count popularity(const Word& pattern, std::span<const Word> words) {
    require_pattern(pattern);
    Count total = 0;
    for (const auto& w : words) total += occurrences_count(pattern, w);
    return total;
}

Count trace_statistic(const Trace& t, const PositionSet& anchors_at, const Word& pattern, const Word& w) {
    require_pattern(pattern);
    if (t.size() != pattern.size())
        throw std::invalid_argument("trace length differs from pattern length");
    const auto anchors = t.anchors();
    const auto at = anchors_at.to_vector();
    if (at.size() != anchors.size())
        throw std::invalid_argument("|A| = " + std::to_string(at.size()) + " but trace has " +
                                    std::to_string(anchors.size()) + " anchored cells");
    if (!is_trace(t, pattern))
        throw std::invalid_argument(format_trace(t) + " is not a trace of " + format_word(pattern));
    std::vector<std::size_t> fixed(pattern.size(), 0);
    for (std::size_t r = 0; r < anchors.size(); ++r) {
        if (at[r] > w.size()) return 0;
        if (w[at[r] - 1] != t.value(anchors[r] - 1)) return 0;
        fixed[anchors[r] - 1] = at[r];
    }
    return OccurrenceSearch(pattern, w, std::move(fixed), nullptr).run();
}

Restriction restrict_word(const Word& w, PositionInterval where, ValueInterval values) {
    if (where.first < 1 || where.first > where.last || where.last > w.size())
        throw std::invalid_argument("position interval [" + std::to_string(where.first) + "," +
                                    std::to_string(where.last) + "] outside 1.." + std::to_string(w.size()));
    if (values.low > values.high) throw std::invalid_argument("empty value interval");
    std::vector<Symbol> sub;
    Restriction r;
    for (std::size_t p = where.first; p <= where.last; ++p) {
        const Symbol x = w[p - 1];
        if (x >= values.low && x <= values.high) {
            sub.push_back(x);
            r.positions.push_back(p);
        }
    }
    r.subword = Word(std::move(sub));
    return r;
}

Word substitute_at(const Word& w, std::span<const std::size_t> positions, const Word& u,
                   std::span<const Symbol> symbols) {
    if (u.size() != positions.size())
        throw std::invalid_argument("substitution length mismatch: |u| = " + std::to_string(u.size()) +
                                    ", subword length " + std::to_string(positions.size()));
    if (!is_pattern(u) || static_cast<std::size_t>(u.arity()) != symbols.size())
        throw std::invalid_argument("substitution alphabet mismatch: " + format_word(u) + " over " +
                                    std::to_string(symbols.size()) + " symbols");
    std::vector<Symbol> out(w.begin(), w.end());
    for (std::size_t r = 0; r < positions.size(); ++r)
        out.at(positions[r] - 1) = symbols[static_cast<std::size_t>(u[r] - 1)];
    return Word(std::move(out));
}

Word substitute(const Word& w, PositionInterval where, ValueInterval values, const Word& u) {
    const auto r = restrict_word(w, where, values);
    const auto alphabet = underlying_alphabet(r.subword);
    const std::vector<Symbol> symbols(alphabet.begin(), alphabet.end());
    return substitute_at(w, r.positions, u, symbols);
}

}  // namespace dpat
