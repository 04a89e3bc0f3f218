#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

namespace dpat {

using Symbol = int;

/// Finite sequence of positive integers. Words, patterns and permutations
/// all share this carrier. Container access via operator[] is 0-based;
/// every *position* exchanged through the public API (descent sets, trace
/// anchors, intervals) is 1-based.
class Word {
public:
    Word() = default;
    Word(std::initializer_list<Symbol> entries);
    explicit Word(std::vector<Symbol> entries);

    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    Symbol operator[](std::size_t i) const noexcept { return entries_[i]; }
    /// 1-based access.
    Symbol at(std::size_t position) const;

    const std::vector<Symbol>& entries() const noexcept { return entries_; }
    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

    /// Maximal entry, 0 for the empty word.
    Symbol arity() const noexcept;

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word& a, const Word& b) { return a.entries_ <=> b.entries_; }

private:
    std::vector<Symbol> entries_;
};

/// Set of 1-based positions, at most 64.
class PositionSet {
public:
    static constexpr std::size_t kMaxPosition = 64;

    PositionSet() = default;
    PositionSet(std::initializer_list<std::size_t> positions);
    static PositionSet from_mask(std::uint64_t mask) noexcept;
    static PositionSet from_vector(const std::vector<std::size_t>& positions);

    bool contains(std::size_t position) const noexcept;
    void insert(std::size_t position);
    std::size_t size() const noexcept;
    bool empty() const noexcept { return mask_ == 0; }
    /// Largest member, 0 when empty.
    std::size_t max() const noexcept;
    std::uint64_t mask() const noexcept { return mask_; }
    std::vector<std::size_t> to_vector() const;

    friend bool operator==(const PositionSet&, const PositionSet&) = default;
    friend auto operator<=>(const PositionSet&, const PositionSet&) = default;

private:
    std::uint64_t mask_ = 0;
};

using Alphabet = std::set<Symbol>;

/// Binary word b_1..b_n with b_i = 1 iff i is a descent; b_n is always 0.
class DescentWord {
public:
    DescentWord() = default;
    /// Throws std::invalid_argument on a non-binary entry or a trailing 1.
    explicit DescentWord(std::vector<std::uint8_t> bits);

    std::size_t size() const noexcept { return bits_.size(); }
    bool bit(std::size_t position) const { return bits_.at(position - 1) != 0; }
    const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }
    PositionSet descents() const;

    friend bool operator==(const DescentWord&, const DescentWord&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// d-equivalence class descriptor.
struct DClass {
    std::size_t length = 0;
    Alphabet alphabet;
    PositionSet descents;

    friend bool operator==(const DClass&, const DClass&) = default;
    friend auto operator<=>(const DClass&, const DClass&) = default;
};

PositionSet descent_set(const Word& w);
PositionSet ascent_set(const Word& w);
DescentWord descent_word(const Word& w);
DescentWord descent_word_of(std::size_t n, const PositionSet& descents);
Alphabet underlying_alphabet(const Word& w);

bool d_equivalent(const Word& v, const Word& w);

Word reverse(const Word& w);
/// x -> q - x + 1 with q the word's own maximal entry.
Word complement(const Word& w);

/// Replace entries by their rank among the distinct values.
Word reduce(const Word& w);
bool is_pattern(const Word& w);
bool order_isomorphic(const Word& a, const Word& b);
bool is_permutation(const Word& w);

/// d-class containing w.
DClass class_of(const Word& w);

/// Visits the words of the class in lexicographic order by backtracking
/// over (alphabet, descent set) constraints. Throws std::invalid_argument
/// when a descent position lies outside 1..n-1 or the alphabet is empty
/// or holds a non-positive symbol.
void for_each_in_class(const DClass& c, const std::function<void(const Word&)>& visit);
std::vector<Word> enumerate_class(const DClass& c);
std::size_t class_size(const DClass& c);

/// All q-ary words of length n with descent set S, any alphabet.
void for_each_in_descent_class(std::size_t n, Symbol q, const PositionSet& descents,
                               const std::function<void(const Word&)>& visit);
std::vector<Word> enumerate_descent_class(std::size_t n, Symbol q, const PositionSet& descents);

/// Every non-empty d-class of [q]^n, sorted.
std::vector<DClass> all_classes(std::size_t n, Symbol q);

/// All patterns of length k (every arity), lexicographic.
std::vector<Word> all_patterns(std::size_t k);

// Text syntax: contiguous digits when every entry is <= 9, otherwise
// comma separated. Position sets are comma separated; "" or "-" is empty.
Word parse_word(const std::string& text);
std::string format_word(const Word& w);
PositionSet parse_positions(const std::string& text);
std::string format_positions(const PositionSet& s);
DescentWord parse_descent_word(const std::string& text);
std::string format_descent_word(const DescentWord& b);
Alphabet parse_alphabet(const std::string& text);
std::string format_alphabet(const Alphabet& a);

}  // namespace dpat
