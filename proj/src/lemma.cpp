#include "dpat/lemma.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "dpat/psi.hpp"

namespace dpat {

namespace {

void bad(const std::string& what) { throw std::invalid_argument("malformed lemma instance: " + what); }

std::size_t count_of(const Word& w, Symbol x) { return static_cast<std::size_t>(std::count(w.begin(), w.end(), x)); }

// Trace symbol standing for pattern value `value`, read from the leftmost
// anchored cell of p carrying it. All such cells must agree.
std::optional<Symbol> role_of(const Word& p, const Trace& t, Symbol value) {
    std::optional<Symbol> found;
    for (std::size_t l = 0; l < p.size(); ++l) {
        if (t.is_hole(l) || p[l] != value) continue;
        if (found && *found != t.value(l)) throw std::logic_error("trace cells for one pattern value disagree");
        if (!found) found = t.value(l);
    }
    return found;
}

std::vector<std::size_t> positions_of(const Word& w, Gap g, ValueInterval values) {
    std::vector<std::size_t> out;
    if (g.empty() || values.low > values.high) return out;
    for (std::size_t p = g.first; p <= g.last; ++p) {
        const Symbol x = w[p - 1];
        if (x >= values.low && x <= values.high) out.push_back(p);
    }
    return out;
}

Word subword_at(const Word& w, const std::vector<std::size_t>& positions) {
    std::vector<Symbol> out;
    out.reserve(positions.size());
    for (auto p : positions) out.push_back(w[p - 1]);
    return Word(std::move(out));
}

std::vector<Symbol> symbols_of(const Word& sub) {
    const auto a = underlying_alphabet(sub);
    return {a.begin(), a.end()};
}

// Re-reads the entries at `positions` through `transform` (applied to the
// reduction) over the same symbol set.
Word rewrite(const Word& w, const std::vector<std::size_t>& positions, const std::function<Word(const Word&)>& transform) {
    if (positions.empty()) return w;
    const Word sub = subword_at(w, positions);
    return substitute_at(w, positions, transform(reduce(sub)), symbols_of(sub));
}

Word psi_own(const Word& u) { return psi(u, u.arity()); }
Word psi_own_inverse(const Word& u) { return psi_inverse(u, u.arity()); }

void check_host(const Word& w, std::size_t n) {
    if (w.size() != n)
        throw std::invalid_argument("host word length " + std::to_string(w.size()) + " differs from instance length " +
                                    std::to_string(n));
}

void check_common(const Word& p, const Word& s, const Trace& t, const PositionSet& at, std::size_t n,
                  std::size_t holes) {
    if (!is_pattern(p) || !is_pattern(s)) bad("p and s must be patterns");
    if (p.size() != s.size()) bad("p and s differ in length");
    if (!d_equivalent(p, s)) bad(format_word(p) + " and " + format_word(s) + " are not d-equivalent");
    if (t.size() != p.size()) bad("trace length differs from pattern length");
    if (t.hole_count() != holes) bad("trace must have exactly " + std::to_string(holes) + " hole(s)");
    if (!is_trace(t, p) || !is_trace(t, s)) bad(format_trace(t) + " is not a trace of both patterns");
    if (at.size() != p.size() - holes) bad("|A| must be k - " + std::to_string(holes));
    if (!at.empty() && at.max() > n) bad("A exceeds the host length");
}

// One-position substitution on the gap. `forward` selects c∘psi; the inverse map
// runs the same case split with the two directions exchanged.
Word lemma1_apply(const Lemma1Instance& inst, const Word& w, bool forward) {
    check_host(w, inst.host_length);
    if (!carries_trace(inst.t, inst.anchors_at, w)) return w;
    const auto positions = positions_of(w, inst.gap, inst.values);
    if (positions.empty()) return w;
    const Word sub = subword_at(w, positions);
    auto symbols = symbols_of(sub);
    const bool has_x = std::binary_search(symbols.begin(), symbols.end(), inst.x);
    const bool has_y = std::binary_search(symbols.begin(), symbols.end(), inst.y);
    const auto there = [](const Word& u) { return c_psi(u); };
    const auto back = [](const Word& u) { return c_psi_inverse(u); };
    const Word u = reduce(sub);

    Word image;
    if (has_x == has_y) {
        image = forward ? there(u) : back(u);
    } else {
        // One of x, y is missing: move the symbol set across so that the
        // copies of x turn into copies of y (and back).
        const bool x_side = has_x;
        image = (x_side == forward) ? there(u) : back(u);
        const Symbol drop = x_side ? inst.x : inst.y;
        const Symbol add = x_side ? inst.y : inst.x;
        symbols.erase(std::find(symbols.begin(), symbols.end(), drop));
        symbols.insert(std::upper_bound(symbols.begin(), symbols.end(), add), add);
    }
    return substitute_at(w, positions, image, symbols);
}

Word lemma2_forward(const Lemma2Instance& inst, const Word& w, bool right_first) {
    check_host(w, inst.host_length);
    if (!carries_trace(inst.t, inst.anchors_at, w)) return w;
    Word cur = w;
    const Gap first = right_first ? inst.right : inst.left;
    const Gap second = right_first ? inst.left : inst.right;
    cur = rewrite(cur, positions_of(cur, first, inst.values), psi_own);
    cur = rewrite(cur, positions_of(cur, second, inst.values), psi_own);
    auto joint = positions_of(cur, inst.left, inst.values);
    const auto rhs = positions_of(cur, inst.right, inst.values);
    joint.insert(joint.end(), rhs.begin(), rhs.end());
    return rewrite(cur, joint, [](const Word& u) { return complement(u); });
}

}  // namespace

bool carries_trace(const Trace& t, const PositionSet& anchors_at, const Word& w) {
    const auto anchors = t.anchors();
    const auto at = anchors_at.to_vector();
    if (anchors.size() != at.size()) return false;
    for (std::size_t r = 0; r < at.size(); ++r)
        if (at[r] > w.size() || w[at[r] - 1] != t.value(anchors[r] - 1)) return false;
    return true;
}

Lemma1Instance Lemma1Instance::make(Word p, Word s, Trace t, PositionSet anchors_at, std::size_t host_length) {
    check_common(p, s, t, anchors_at, host_length, 1);
    const std::size_t k = p.size();
    std::vector<std::size_t> diff;
    for (std::size_t l = 0; l < k; ++l)
        if (p[l] != s[l]) diff.push_back(l + 1);
    if (diff.size() != 1) bad("p and s must differ in exactly one position");
    const std::size_t i = diff[0];
    if (s[i - 1] != p[i - 1] + 1) bad("need s_i = p_i + 1");
    if (!t.is_hole(i - 1)) bad("the hole must sit at the differing position");
    // Forced by both being patterns; kept as a check.
    if (count_of(p, p[i - 1]) < 2) bad("p_i must occur at least twice in p");

    Lemma1Instance inst;
    inst.x = role_of(p, t, p[i - 1]).value();
    inst.y = role_of(s, t, s[i - 1]).value();
    const auto A = anchors_at.to_vector();
    if (i == 1) {
        inst.gap = {1, A[0] - 1};
    } else if (i == k) {
        inst.gap = {A[k - 2] + 1, host_length};
    } else {
        inst.gap = {A[i - 2] + 1, A[i - 1] - 1};
    }
    inst.values = {inst.x, inst.y};
    inst.i = i;
    inst.p = std::move(p);
    inst.s = std::move(s);
    inst.t = std::move(t);
    inst.anchors_at = anchors_at;
    inst.host_length = host_length;
    return inst;
}

Lemma2Instance Lemma2Instance::make(Word p, Word s, Trace t, PositionSet anchors_at, std::size_t host_length,
                                    Symbol host_arity) {
    check_common(p, s, t, anchors_at, host_length, 2);
    const std::size_t k = p.size();
    std::vector<std::size_t> diff;
    for (std::size_t l = 0; l < k; ++l)
        if (p[l] != s[l]) diff.push_back(l + 1);
    if (diff.size() != 2) bad("p and s must differ in exactly two positions");
    const std::size_t i = diff[0];
    const std::size_t j = diff[1];
    const Symbol pi = p[i - 1];
    const Symbol pj = p[j - 1];
    if (s[i - 1] != pj || s[j - 1] != pi) bad("s must exchange the entries of p at i and j");
    if (pj != pi + 1) bad("need p_j = p_i + 1");
    if (count_of(p, pi) != 1 || count_of(p, pj) != 1) bad("p_i and p_j must each occur once");
    if (!t.is_hole(i - 1) || !t.is_hole(j - 1)) bad("holes must sit at the differing positions");
    if (j == i + 1) throw std::logic_error("d-equivalent swap at adjacent positions");

    Lemma2Instance inst;
    inst.values.low = pi == 1 ? 1 : role_of(p, t, pi - 1).value() + 1;
    inst.values.high = pj == p.arity() ? host_arity : role_of(p, t, pj + 1).value() - 1;
    const auto A = anchors_at.to_vector();
    inst.left = {i == 1 ? 1 : A[i - 2] + 1, A[i - 1] - 1};
    inst.right = {A[j - 3] + 1, j == k ? host_length : A[j - 2] - 1};
    inst.i = i;
    inst.j = j;
    inst.p = std::move(p);
    inst.s = std::move(s);
    inst.t = std::move(t);
    inst.anchors_at = anchors_at;
    inst.host_length = host_length;
    inst.host_arity = host_arity;
    return inst;
}

Word lemma1_map(const Lemma1Instance& inst, const Word& w) { return lemma1_apply(inst, w, true); }

Word lemma1_inverse(const Lemma1Instance& inst, const Word& v) { return lemma1_apply(inst, v, false); }

Word lemma2_map(const Lemma2Instance& inst, const Word& w) { return lemma2_forward(inst, w, false); }

Word lemma2_map_right_first(const Lemma2Instance& inst, const Word& w) { return lemma2_forward(inst, w, true); }

Word lemma2_inverse(const Lemma2Instance& inst, const Word& v) {
    check_host(v, inst.host_length);
    if (!carries_trace(inst.t, inst.anchors_at, v)) return v;
    auto joint = positions_of(v, inst.left, inst.values);
    const auto rhs = positions_of(v, inst.right, inst.values);
    joint.insert(joint.end(), rhs.begin(), rhs.end());
    Word cur = rewrite(v, joint, [](const Word& u) { return complement(u); });
    cur = rewrite(cur, positions_of(cur, inst.left, inst.values), psi_own_inverse);
    cur = rewrite(cur, positions_of(cur, inst.right, inst.values), psi_own_inverse);
    return cur;
}

namespace {

template <class Map>
std::vector<std::size_t> class_table(std::span<const Word> words, Map&& map) {
    std::vector<std::size_t> image(words.size());
    for (std::size_t k = 0; k < words.size(); ++k) {
        const Word v = map(words[k]);
        const auto it = std::lower_bound(words.begin(), words.end(), v);
        if (it == words.end() || *it != v)
            throw std::logic_error(format_word(words[k]) + " maps outside the class to " + format_word(v));
        image[k] = static_cast<std::size_t>(it - words.begin());
    }
    return image;
}

}  // namespace

std::vector<std::size_t> lemma1_class_table(const Lemma1Instance& inst, std::span<const Word> words) {
    return class_table(words, [&](const Word& w) { return lemma1_map(inst, w); });
}

std::vector<std::size_t> lemma2_class_table(const Lemma2Instance& inst, std::span<const Word> words) {
    return class_table(words, [&](const Word& w) { return lemma2_map(inst, w); });
}

}  // namespace dpat
