#pragma once

#include <cstddef>
#include <vector>

#include "necklace/word.hpp"

// Brute-force reference implementations. Everything here is definitional
// (rotation scans over explicit word lists) and shares no code with the
// optimized predicates in word.hpp; the duplication is what makes these
// usable as an independent check.
namespace necklace::oracle {

inline constexpr std::size_t kDefaultCap = 14;

/// All distinct words with the given content, in lexicographic order.
/// Refuses contents with total length above `cap`.
std::vector<Word> brute_words(const Content& c, std::size_t cap = kDefaultCap);

/// brute_words filtered by the definitional rotation-scan predicates.
std::vector<Word> brute_necklaces(const Content& c, std::size_t cap = kDefaultCap);
std::vector<Word> brute_lyndon(const Content& c, std::size_t cap = kDefaultCap);
std::vector<Word> brute_prenecklaces(const Content& c, std::size_t cap = kDefaultCap);

/// Definitional predicates: w <= (resp. <) each rotation, compared one
/// rotation at a time.
bool is_necklace(const Word& w);
bool is_lyndon(const Word& w);

/// Definitional prenecklace test: searches for a necklace extension of w
/// (appending copies of the largest symbol; a prenecklace always reaches a
/// necklace within 2n appended symbols).
bool is_prenecklace(const Word& w);

/// Longest Lyndon prefix by scanning every prefix with the definitional
/// Lyndon test.
std::size_t lyn(const Word& w);

}  // namespace necklace::oracle
