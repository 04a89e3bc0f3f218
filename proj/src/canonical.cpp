#include "dpat/canonical.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

namespace dpat {

namespace {

void require_pattern(const Word& p) {
    if (!is_pattern(p)) throw std::invalid_argument("not a pattern: " + format_word(p));
}

}  // namespace

Symbol minimal_arity(const DescentWord& b) {
    std::size_t longest = 0;
    std::size_t cur = 0;
    for (auto bit : b.bits()) {
        cur = bit ? cur + 1 : 0;
        longest = std::max(longest, cur);
    }
    return static_cast<Symbol>(longest) + 1;
}

RunDecomposition runs(const DescentWord& b) {
    RunDecomposition out;
    const auto& bits = b.bits();
    const std::size_t n = bits.size();
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        if (bits[i]) {
            // 1s then the closing 0; b_n = 0 guarantees termination.
            while (bits[j]) ++j;
            out.push_back({RunKind::descent, i + 1, j + 1});
        } else {
            // A 0 only closes the 1s before it, so 0-blocks are never split.
            while (j + 1 < n && bits[j + 1] == 0) ++j;
            out.push_back({RunKind::ascent, i + 1, j + 1});
        }
        i = j + 1;
    }
    return out;
}

std::vector<std::size_t> run_index(const RunDecomposition& r, std::size_t n) {
    std::vector<std::size_t> idx(n, 0);
    for (std::size_t k = 0; k < r.size(); ++k)
        for (std::size_t p = r[k].first; p <= r[k].last; ++p) idx[p - 1] = k;
    return idx;
}

Word alpha(const DescentWord& b) {
    const auto& bits = b.bits();
    const std::size_t n = bits.size();
    std::vector<Symbol> out(n);
    // alpha_i = min{j >= i : b_j = 0} - i + 1, computed right to left.
    Symbol run = 0;
    for (std::size_t i = n; i-- > 0;) {
        run = bits[i] ? run + 1 : 1;
        out[i] = run;
    }
    return Word(std::move(out));
}

std::vector<std::size_t> cover_order(const DescentWord& b) {
    std::vector<std::size_t> order;
    order.reserve(b.size());
    for (const auto& r : runs(b)) {
        if (r.kind == RunKind::ascent) {
            for (std::size_t p = r.first; p <= r.last; ++p) order.push_back(p);
        } else {
            for (std::size_t p = r.last; p >= r.first; --p) order.push_back(p);
        }
    }
    return order;
}

Word omega(const DescentWord& b) {
    const auto order = cover_order(b);
    std::vector<Symbol> out(order.size());
    for (std::size_t rank = 0; rank < order.size(); ++rank) out[order[rank] - 1] = static_cast<Symbol>(rank + 1);
    return Word(std::move(out));
}

Word beta(Symbol q, const DescentWord& b) {
    const auto n = static_cast<Symbol>(b.size());
    if (n == 0 && q == 0) return Word{};
    const Symbol lo = minimal_arity(b);
    if (q < lo || q > n)
        throw std::invalid_argument("no " + std::to_string(q) + "-ary pattern with descent word " +
                                    format_descent_word(b) + " (need " + std::to_string(lo) + " <= q <= " +
                                    std::to_string(n) + ")");
    const Word a = alpha(b);
    const auto order = cover_order(b);
    std::vector<Symbol> out(b.size());
    Symbol running_max = 0;
    for (std::size_t i = 1; i <= order.size(); ++i) {
        const std::size_t pos = order[i - 1];
        running_max = std::max(running_max, a[pos - 1]);
        const Symbol floor = q - (n - static_cast<Symbol>(i));
        out[pos - 1] = running_max >= floor ? a[pos - 1] : floor;
    }
    return Word(std::move(out));
}

Word alpha_of(const Word& pattern) {
    require_pattern(pattern);
    return alpha(descent_word(pattern));
}

Word omega_of(const Word& pattern) {
    require_pattern(pattern);
    return omega(descent_word(pattern));
}

Word beta_of(const Word& pattern) {
    require_pattern(pattern);
    return beta(pattern.arity(), descent_word(pattern));
}

}  // namespace dpat
