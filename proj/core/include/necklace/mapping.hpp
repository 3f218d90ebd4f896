#pragma once

#include <cstdint>
#include <optional>
#include <set>

#include "necklace/word.hpp"

namespace necklace {

/// Factorization of an unstable necklace w = a_1...a_n with every symbol
/// present: writing w' = a_1...a_{n-1} and p = lyn(w'), w' factors uniquely
/// as (a_1...a_p)^j a_1...a_i with j >= 1 and 1 <= i <= p. z is the largest
/// position <= i with a_z = 0 (it exists because a_1 = 0), so
/// a_{z+1},...,a_i are all nonzero, and x = a_n >= 1.
///
/// Lengths and positions are 1-based to match the reported (p, j, i, z, x).
struct UnstableDecomposition {
    std::size_t period;          // p: lyn of the length-(n-1) prefix
    std::size_t repetitions;     // j
    std::size_t tail_length;     // i
    std::size_t last_zero;       // z
    Symbol trailing_symbol;      // x

    bool zero_ends_tail() const noexcept { return last_zero == tail_length; }
};

/// Decompose an unstable necklace. Throws std::invalid_argument when the
/// input is not a necklace, is stable, or is missing an alphabet symbol.
UnstableDecomposition decompose(const Word& w);

/// The zero-deleting injection from unstable necklaces into Lyndon words:
///
///   f(w) = (a_1...a_p)^j a_1...a_{z-1} x                          if z = i
///   f(w) = (a_1...a_p)^j x a_i a_{i-1}...a_{z+2} a_1...a_{z-1} a_{z+1}  if z < i
///
/// The image has length n-1, the content of w with one fewer 0, and is a
/// Lyndon word; all three facts are checked on every call.
Word apply_f(const Word& w);

/// { f(w) : w unstable necklace of content c }. Checks injectivity
/// (image size = number of unstable necklaces) on every call.
std::set<Word> image_of_f(const Content& c);

/// A Lyndon word of content (n_0 - 1, n_1, ..., n_{k-1}) outside the image
/// of f, built per the value of n_0. Exists whenever k > 2 and every
/// n_i >= 1; returns nullopt for k = 2 (no witness is claimed there).
std::optional<Word> nonsurjectivity_witness(const Content& c);

/// Whether N(n,d) = L(n-1,d) + L(n-1,d-1) holds with equality, plus a
/// constructive strict witness when the witness families apply (n > 10,
/// using the density symmetry d <-> n-d to reach 2 < n-d <= n/2).
struct EqualityStatus {
    bool equality;
    std::optional<Word> witness;
};

/// Classification: equality iff d in {1, 2, n-2, n-1} with (n,d) != (2,1),
/// or (n,d) one of (6,3), (7,3), (7,4), (8,4), (9,3), (9,6). Cross-checked
/// against the counting formulas at runtime for n <= 64.
EqualityStatus equality_status(std::uint64_t n, std::uint64_t d);

/// Binary Lyndon word of length n-1 and density d that is provably outside
/// the image of f on the unstable necklaces of N(n,d). Applicable when
/// n > 10 and 2 < n-d <= n/2; returns nullopt otherwise.
std::optional<Word> strict_witness(std::uint64_t n, std::uint64_t d);

}  // namespace necklace
