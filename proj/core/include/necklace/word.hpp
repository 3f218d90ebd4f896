#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace necklace {

/// A symbol is an integer in [0, k) for the word's alphabet size k.
using Symbol = std::uint32_t;

/// A word over the alphabet {0, 1, ..., k-1}. The alphabet size travels with
/// the word: content vectors need trailing zero counts to be meaningful, and
/// the prenecklace extension rule depends on k.
///
/// Storage is 0-based; positions reported to users (e.g. the z component of
/// an unstable decomposition) are 1-based.
class Word {
public:
    Word(std::vector<Symbol> symbols, Symbol alphabet_size);

    Symbol alphabet_size() const noexcept { return k_; }
    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    Symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }
    std::span<const Symbol> symbols() const noexcept { return symbols_; }

    /// First `length` symbols as a word over the same alphabet.
    Word prefix(std::size_t length) const;

    /// Container ordering: symbols lexicographically, alphabet size as a
    /// tiebreak. For the checked same-alphabet comparison use lex_compare.
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept;
    friend bool operator==(const Word& a, const Word& b) noexcept = default;

private:
    std::vector<Symbol> symbols_;
    Symbol k_;
};

/// Per-symbol multiplicity vector (n_0, ..., n_{k-1}); k >= 2.
class Content {
public:
    explicit Content(std::vector<std::uint64_t> counts);

    /// Binary content with `zeros` 0s and `ones` 1s.
    static Content binary(std::uint64_t zeros, std::uint64_t ones);
    /// Binary content of length n and density d (d ones, n-d zeros).
    static Content binary_density(std::uint64_t n, std::uint64_t d);

    std::size_t alphabet_size() const noexcept { return counts_.size(); }
    std::uint64_t count(std::size_t symbol) const;
    const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }
    std::uint64_t total() const noexcept { return total_; }

    /// Copy with n_symbol decremented by one.
    Content decremented(std::size_t symbol) const;

    friend bool operator==(const Content& a, const Content& b) noexcept;

private:
    std::vector<std::uint64_t> counts_;
    std::uint64_t total_;
};

/// Lexicographic comparison of words over the same alphabet; a proper prefix
/// precedes its extensions. Throws std::invalid_argument on alphabet mismatch.
std::strong_ordering lex_compare(const Word& a, const Word& b);

/// Left rotation by r: a_{r+1}...a_n a_1...a_r. Requires 0 <= r < max(1, n).
Word rotate(const Word& w, std::size_t r);

/// True iff w is lexicographically <= every rotation of itself. O(n).
bool is_necklace(const Word& w);

/// True iff w is strictly smaller than every non-trivial rotation
/// (an aperiodic necklace). O(n).
bool is_lyndon(const Word& w);

/// True iff w is a prefix of some necklace over the same alphabet. O(n),
/// via the prenecklace extension rule a_{m-p} <= b.
bool is_prenecklace(const Word& w);

/// Length of the longest prefix of w that is a Lyndon word. O(n).
std::size_t lyn(const Word& w);

/// Smallest rotation offset r such that rotate(w, r) is lexicographically
/// minimal among all rotations. O(n). is_necklace(w) iff this is 0.
std::size_t min_rotation(const Word& w);

/// Multiplicity vector of w over its alphabet.
Content content_of(const Word& w);

/// Text encoding: a string of decimal digits for k <= 10 ("01120112"),
/// comma-separated decimal symbol values for k > 10 ("0,11,3").
std::string to_string(const Word& w);

/// Inverse of to_string. When alphabet_size is not given it is inferred as
/// max(symbol)+1, but at least 2.
Word parse_word(std::string_view text, std::optional<Symbol> alphabet_size = std::nullopt);

std::string to_string(const Content& c);

}  // namespace necklace
