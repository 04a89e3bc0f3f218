#include "dpat/word.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace dpat {

namespace {

void check_entries(const std::vector<Symbol>& entries) {
    for (Symbol x : entries)
        if (x < 1) throw std::invalid_argument("word entries must be positive, got " + std::to_string(x));
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == sep) {
            parts.push_back(cur);
            cur.clear();
        } else if (ch != ' ') {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    return parts;
}

long parse_int(const std::string& s, const std::string& context) {
    if (s.empty()) throw std::invalid_argument("empty number in '" + context + "'");
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(s, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a number: '" + s + "' in '" + context + "'");
    }
    if (used != s.size()) throw std::invalid_argument("not a number: '" + s + "' in '" + context + "'");
    return v;
}

}  // namespace

Word::Word(std::initializer_list<Symbol> entries) : entries_(entries) { check_entries(entries_); }

Word::Word(std::vector<Symbol> entries) : entries_(std::move(entries)) { check_entries(entries_); }

Symbol Word::at(std::size_t position) const {
    if (position < 1 || position > entries_.size())
        throw std::out_of_range("position " + std::to_string(position) + " outside word of length " +
                                std::to_string(entries_.size()));
    return entries_[position - 1];
}

Symbol Word::arity() const noexcept {
    return entries_.empty() ? 0 : *std::max_element(entries_.begin(), entries_.end());
}

PositionSet::PositionSet(std::initializer_list<std::size_t> positions) {
    for (auto p : positions) insert(p);
}

PositionSet PositionSet::from_mask(std::uint64_t mask) noexcept {
    PositionSet s;
    s.mask_ = mask;
    return s;
}

PositionSet PositionSet::from_vector(const std::vector<std::size_t>& positions) {
    PositionSet s;
    for (auto p : positions) s.insert(p);
    return s;
}

bool PositionSet::contains(std::size_t position) const noexcept {
    return position >= 1 && position <= kMaxPosition && ((mask_ >> (position - 1)) & 1U) != 0;
}

void PositionSet::insert(std::size_t position) {
    if (position < 1 || position > kMaxPosition)
        throw std::out_of_range("position " + std::to_string(position) + " outside 1.." +
                                std::to_string(kMaxPosition));
    mask_ |= std::uint64_t{1} << (position - 1);
}

std::size_t PositionSet::size() const noexcept { return static_cast<std::size_t>(std::popcount(mask_)); }

std::size_t PositionSet::max() const noexcept {
    return mask_ == 0 ? 0 : kMaxPosition - static_cast<std::size_t>(std::countl_zero(mask_));
}

std::vector<std::size_t> PositionSet::to_vector() const {
    std::vector<std::size_t> out;
    for (std::uint64_t m = mask_; m != 0; m &= m - 1)
        out.push_back(static_cast<std::size_t>(std::countr_zero(m)) + 1);
    return out;
}

DescentWord::DescentWord(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto b : bits_)
        if (b > 1) throw std::invalid_argument("descent word must be binary");
    if (!bits_.empty() && bits_.back() != 0)
        throw std::invalid_argument("descent word must end with 0");
}

PositionSet DescentWord::descents() const {
    PositionSet s;
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i]) s.insert(i + 1);
    return s;
}

PositionSet descent_set(const Word& w) {
    if (w.size() > PositionSet::kMaxPosition + 1) throw std::length_error("word too long for a position set");
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) mask |= std::uint64_t{1} << i;
    return PositionSet::from_mask(mask);
}

PositionSet ascent_set(const Word& w) {
    if (w.size() > PositionSet::kMaxPosition + 1) throw std::length_error("word too long for a position set");
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] < w[i + 1]) mask |= std::uint64_t{1} << i;
    return PositionSet::from_mask(mask);
}

DescentWord descent_word(const Word& w) {
    std::vector<std::uint8_t> bits(w.size(), 0);
    for (std::size_t i = 0; i + 1 < w.size(); ++i) bits[i] = w[i] > w[i + 1] ? 1 : 0;
    return DescentWord(std::move(bits));
}

DescentWord descent_word_of(std::size_t n, const PositionSet& descents) {
    if (!descents.empty() && descents.max() >= n)
        throw std::invalid_argument("descent positions must lie in 1..n-1");
    std::vector<std::uint8_t> bits(n, 0);
    for (auto p : descents.to_vector()) bits[p - 1] = 1;
    return DescentWord(std::move(bits));
}

Alphabet underlying_alphabet(const Word& w) { return Alphabet(w.begin(), w.end()); }

bool d_equivalent(const Word& v, const Word& w) {
    return v.size() == w.size() && descent_set(v) == descent_set(w) &&
           underlying_alphabet(v) == underlying_alphabet(w);
}

Word reverse(const Word& w) { return Word(std::vector<Symbol>(w.entries().rbegin(), w.entries().rend())); }

Word complement(const Word& w) {
    const Symbol q = w.arity();
    std::vector<Symbol> out;
    out.reserve(w.size());
    for (Symbol x : w) out.push_back(q - x + 1);
    return Word(std::move(out));
}

Word reduce(const Word& w) {
    std::vector<Symbol> values(w.begin(), w.end());
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    std::vector<Symbol> out;
    out.reserve(w.size());
    for (Symbol x : w)
        out.push_back(static_cast<Symbol>(std::lower_bound(values.begin(), values.end(), x) - values.begin()) + 1);
    return Word(std::move(out));
}

bool is_pattern(const Word& w) {
    const auto alphabet = underlying_alphabet(w);
    return alphabet.empty() || (*alphabet.rbegin() == static_cast<Symbol>(alphabet.size()));
}

bool order_isomorphic(const Word& a, const Word& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if ((a[i] < a[j]) != (b[i] < b[j]) || (a[i] == a[j]) != (b[i] == b[j])) return false;
    return true;
}

bool is_permutation(const Word& w) {
    return is_pattern(w) && underlying_alphabet(w).size() == w.size();
}

DClass class_of(const Word& w) { return DClass{w.size(), underlying_alphabet(w), descent_set(w)}; }

namespace {

// Backtracking over positions; `symbols` sorted ascending. When `require_all`
// is set every symbol must appear somewhere in the word.
class ClassWalker {
public:
    ClassWalker(std::size_t n, std::vector<Symbol> symbols, PositionSet descents, bool require_all,
                const std::function<void(const Word&)>& visit)
        : n_(n), symbols_(std::move(symbols)), descents_(descents), require_all_(require_all), visit_(visit),
          counts_(symbols_.size(), 0), current_(n, 0) {}

    void run() {
        if (n_ == 0) {
            if (!require_all_ || symbols_.empty()) visit_(Word{});
            return;
        }
        step(0, 0);
    }

private:
    void step(std::size_t pos, std::size_t missing_covered) {
        if (pos == n_) {
            visit_(Word(current_));
            return;
        }
        const std::size_t remaining = n_ - pos;
        for (std::size_t k = 0; k < symbols_.size(); ++k) {
            const Symbol x = symbols_[k];
            if (pos > 0) {
                const bool descent = descents_.contains(pos);
                const Symbol prev = current_[pos - 1];
                if (descent ? !(prev > x) : !(prev <= x)) continue;
            }
            std::size_t covered = missing_covered + (counts_[k] == 0 ? 1 : 0);
            if (require_all_ && symbols_.size() - covered > remaining - 1) continue;
            ++counts_[k];
            current_[pos] = x;
            step(pos + 1, covered);
            --counts_[k];
        }
    }

    std::size_t n_;
    std::vector<Symbol> symbols_;
    PositionSet descents_;
    bool require_all_;
    const std::function<void(const Word&)>& visit_;
    std::vector<std::size_t> counts_;
    std::vector<Symbol> current_;
};

void check_descents(std::size_t n, const PositionSet& descents) {
    if (!descents.empty() && descents.max() + 1 > n)
        throw std::invalid_argument("descent positions must lie in 1..n-1 (n=" + std::to_string(n) + ")");
}

}  // namespace

void for_each_in_class(const DClass& c, const std::function<void(const Word&)>& visit) {
    check_descents(c.length, c.descents);
    if (c.alphabet.empty()) throw std::invalid_argument("class alphabet must be non-empty");
    if (*c.alphabet.begin() < 1) throw std::invalid_argument("class alphabet must hold positive symbols");
    if (c.alphabet.size() > c.length) return;
    ClassWalker(c.length, std::vector<Symbol>(c.alphabet.begin(), c.alphabet.end()), c.descents, true, visit).run();
}

std::vector<Word> enumerate_class(const DClass& c) {
    std::vector<Word> out;
    for_each_in_class(c, [&](const Word& w) { out.push_back(w); });
    return out;
}

std::size_t class_size(const DClass& c) {
    std::size_t count = 0;
    for_each_in_class(c, [&](const Word&) { ++count; });
    return count;
}

void for_each_in_descent_class(std::size_t n, Symbol q, const PositionSet& descents,
                               const std::function<void(const Word&)>& visit) {
    check_descents(n, descents);
    if (q < 1) throw std::invalid_argument("q must be positive");
    std::vector<Symbol> symbols(static_cast<std::size_t>(q));
    for (Symbol x = 1; x <= q; ++x) symbols[static_cast<std::size_t>(x - 1)] = x;
    ClassWalker(n, std::move(symbols), descents, false, visit).run();
}

std::vector<Word> enumerate_descent_class(std::size_t n, Symbol q, const PositionSet& descents) {
    std::vector<Word> out;
    for_each_in_descent_class(n, q, descents, [&](const Word& w) { out.push_back(w); });
    return out;
}

std::vector<DClass> all_classes(std::size_t n, Symbol q) {
    std::set<DClass> seen;
    if (n == 0) return {};
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
        const auto descents = PositionSet::from_mask(mask);
        for_each_in_descent_class(n, q, descents, [&](const Word& w) { seen.insert(class_of(w)); });
    }
    return {seen.begin(), seen.end()};
}

std::vector<Word> all_patterns(std::size_t k) {
    std::vector<Word> out;
    if (k == 0) return {Word{}};
    std::vector<Symbol> cur(k, 1);
    const Symbol top = static_cast<Symbol>(k);
    while (true) {
        Word w(cur);
        if (is_pattern(w)) out.push_back(std::move(w));
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == top) cur[--i] = 1;
        if (i == 0) break;
        ++cur[i - 1];
    }
    return out;
}

Word parse_word(const std::string& text) {
    std::vector<Symbol> out;
    if (text.find(',') != std::string::npos) {
        for (const auto& part : split(text, ',')) out.push_back(static_cast<Symbol>(parse_int(part, text)));
    } else {
        for (char ch : text) {
            if (ch == ' ') continue;
            if (ch < '1' || ch > '9') throw std::invalid_argument("bad word syntax: '" + text + "'");
            out.push_back(ch - '0');
        }
    }
    return Word(std::move(out));
}

std::string format_word(const Word& w) {
    const bool digits = std::all_of(w.begin(), w.end(), [](Symbol x) { return x <= 9; });
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!digits && i > 0) os << ',';
        os << w[i];
    }
    return os.str();
}

PositionSet parse_positions(const std::string& text) {
    PositionSet s;
    if (text.empty() || text == "-" || text == "{}") return s;
    std::string body = text;
    if (body.front() == '{' && body.back() == '}') body = body.substr(1, body.size() - 2);
    for (const auto& part : split(body, ',')) {
        const long v = parse_int(part, text);
        if (v < 1) throw std::invalid_argument("positions are 1-based: '" + text + "'");
        s.insert(static_cast<std::size_t>(v));
    }
    return s;
}

std::string format_positions(const PositionSet& s) {
    std::ostringstream os;
    bool first = true;
    for (auto p : s.to_vector()) {
        if (!first) os << ',';
        os << p;
        first = false;
    }
    return os.str();
}

DescentWord parse_descent_word(const std::string& text) {
    std::vector<std::uint8_t> bits;
    for (char ch : text) {
        if (ch == '.' || ch == ' ') continue;
        if (ch != '0' && ch != '1') throw std::invalid_argument("bad descent word: '" + text + "'");
        bits.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    return DescentWord(std::move(bits));
}

std::string format_descent_word(const DescentWord& b) {
    std::string out;
    for (auto bit : b.bits()) out.push_back(static_cast<char>('0' + bit));
    return out;
}

Alphabet parse_alphabet(const std::string& text) {
    Alphabet a;
    std::string body = text;
    if (!body.empty() && body.front() == '{' && body.back() == '}') body = body.substr(1, body.size() - 2);
    for (const auto& part : split(body, ',')) {
        const auto dash = part.find('-');
        if (dash != std::string::npos && dash > 0) {
            const long lo = parse_int(part.substr(0, dash), text);
            const long hi = parse_int(part.substr(dash + 1), text);
            for (long x = lo; x <= hi; ++x) a.insert(static_cast<Symbol>(x));
        } else {
            a.insert(static_cast<Symbol>(parse_int(part, text)));
        }
    }
    if (a.empty() || *a.begin() < 1) throw std::invalid_argument("alphabet must hold positive symbols: '" + text + "'");
    return a;
}

std::string format_alphabet(const Alphabet& a) {
    std::ostringstream os;
    bool first = true;
    for (Symbol x : a) {
        if (!first) os << ',';
        os << x;
        first = false;
    }
    return os.str();
}

}  // namespace dpat
