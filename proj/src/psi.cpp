#include "dpat/psi.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace dpat {

namespace {

struct MultisetCells {
    // Keyed by position-set mask; each list is in lexicographic order.
    std::unordered_map<std::uint64_t, std::vector<Word>> by_descents;
    std::unordered_map<std::uint64_t, std::vector<Word>> by_ascents;
};

std::size_t cache_limit() {
    if (const char* env = std::getenv("DPAT_PSI_CACHE_LIMIT")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
    }
    return 65536;
}

class CellCache {
public:
    std::shared_ptr<const MultisetCells> get(const std::vector<Symbol>& sorted) {
        {
            std::lock_guard lock(mu_);
            if (auto it = cells_.find(sorted); it != cells_.end()) return it->second;
        }
        auto built = build(sorted);
        std::lock_guard lock(mu_);
        if (cells_.size() >= cache_limit()) cells_.clear();
        // First writer wins so callers never observe two tables for one key.
        auto [it, inserted] = cells_.emplace(sorted, std::move(built));
        return it->second;
    }

    std::size_t size() {
        std::lock_guard lock(mu_);
        return cells_.size();
    }

    void clear() {
        std::lock_guard lock(mu_);
        cells_.clear();
    }

private:
    static std::shared_ptr<const MultisetCells> build(std::vector<Symbol> word) {
        auto cells = std::make_shared<MultisetCells>();
        do {
            const Word w(word);
            cells->by_descents[descent_set(w).mask()].push_back(w);
            cells->by_ascents[ascent_set(w).mask()].push_back(w);
        } while (std::next_permutation(word.begin(), word.end()));
        for (const auto& [mask, list] : cells->by_descents) {
            auto it = cells->by_ascents.find(mask);
            const std::size_t other = it == cells->by_ascents.end() ? 0 : it->second.size();
            if (other != list.size())
                throw std::logic_error("psi cell size mismatch for descent set " +
                                       format_positions(PositionSet::from_mask(mask)) + ": " +
                                       std::to_string(list.size()) + " vs " + std::to_string(other));
        }
        if (cells->by_ascents.size() != cells->by_descents.size())
            throw std::logic_error("psi cells: ascent and descent key sets differ");
        return cells;
    }

    std::mutex mu_;
    std::map<std::vector<Symbol>, std::shared_ptr<const MultisetCells>> cells_;
};

CellCache& cache() {
    static CellCache instance;
    return instance;
}

void check_domain(const Word& w, Symbol q) {
    if (w.arity() > q)
        throw std::invalid_argument(format_word(w) + " is not a word over [" + std::to_string(q) + "]");
}

Word match(const Word& w, bool forward) {
    if (w.empty()) return w;
    std::vector<Symbol> sorted(w.begin(), w.end());
    std::sort(sorted.begin(), sorted.end());
    const auto cells = cache().get(sorted);
    const auto key = forward ? descent_set(w).mask() : ascent_set(w).mask();
    const auto& from = forward ? cells->by_descents.at(key) : cells->by_ascents.at(key);
    const auto& to = forward ? cells->by_ascents.at(key) : cells->by_descents.at(key);
    const auto it = std::lower_bound(from.begin(), from.end(), w);
    if (it == from.end() || *it != w) throw std::logic_error("psi: word missing from its own cell");
    return to[static_cast<std::size_t>(it - from.begin())];
}

}  // namespace

Word psi(const Word& w, Symbol q) {
    check_domain(w, q);
    return match(w, true);
}

Word psi_inverse(const Word& w, Symbol q) {
    check_domain(w, q);
    return match(w, false);
}

Word c_psi(const Word& w) {
    if (!is_pattern(w)) throw std::invalid_argument("c_psi expects a pattern: " + format_word(w));
    return complement(psi(w, w.arity()));
}

Word c_psi_inverse(const Word& w) {
    if (!is_pattern(w)) throw std::invalid_argument("c_psi_inverse expects a pattern: " + format_word(w));
    return psi_inverse(complement(w), w.arity());
}

std::size_t psi_cache_size() { return cache().size(); }

void psi_cache_clear() { cache().clear(); }

PsiTable::PsiTable(std::size_t n, Symbol q) : n_(n), q_(q) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < n; ++i) {
        count *= static_cast<std::uint64_t>(q);
        if (count > kMaxWords)
            throw std::length_error("psi table for q=" + std::to_string(q) + ", n=" + std::to_string(n) +
                                    " exceeds " + std::to_string(kMaxWords) + " words");
    }
    image_.assign(count, 0);
    preimage_.assign(count, count);
    for (std::uint64_t c = 0; c < count; ++c) {
        const auto target = code(psi(decode(c), q_));
        image_[c] = target;
        if (preimage_[target] != count) throw std::logic_error("psi is not injective on the cube");
        preimage_[target] = c;
    }
}

std::shared_ptr<const PsiTable> PsiTable::get(std::size_t n, Symbol q) {
    if (q < 1) throw std::invalid_argument("q must be positive");
    static std::mutex mu;
    static std::map<std::pair<std::size_t, Symbol>, std::shared_ptr<const PsiTable>> tables;
    std::lock_guard lock(mu);
    auto& slot = tables[{n, q}];
    if (!slot) slot = std::shared_ptr<const PsiTable>(new PsiTable(n, q));
    return slot;
}

std::uint64_t PsiTable::code(const Word& w) const {
    if (w.size() != n_) throw std::invalid_argument("word length differs from table length");
    std::uint64_t c = 0;
    for (Symbol x : w) {
        if (x > q_) throw std::invalid_argument("entry exceeds table arity");
        c = c * static_cast<std::uint64_t>(q_) + static_cast<std::uint64_t>(x - 1);
    }
    return c;
}

Word PsiTable::decode(std::uint64_t c) const {
    std::vector<Symbol> out(n_);
    for (std::size_t i = n_; i-- > 0;) {
        out[i] = static_cast<Symbol>(c % static_cast<std::uint64_t>(q_)) + 1;
        c /= static_cast<std::uint64_t>(q_);
    }
    return Word(std::move(out));
}

bool PsiTable::is_bijection() const {
    std::vector<bool> hit(image_.size(), false);
    for (auto t : image_) {
        if (hit[t]) return false;
        hit[t] = true;
    }
    return true;
}

}  // namespace dpat
