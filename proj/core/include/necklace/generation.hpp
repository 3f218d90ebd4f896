#pragma once

#include <optional>
#include <vector>

#include "necklace/word.hpp"

namespace necklace {

enum class GenKind {
    prenecklace,  // prenecklaces of length exactly n = total(content)
    necklace,
    lyndon,
};

enum class Stability { stable, unstable };

/// Pull-based lexicographic stream of the fixed-content prenecklaces,
/// necklaces, or Lyndon words of length n = total(content).
///
/// Depth-first extension of a shared prefix buffer using the prenecklace
/// rule: a prefix with longest-Lyndon-prefix length p extends by b iff
/// a_{t-p} <= b < k, with the new length-p value p (b equal) or t+1
/// (b greater). Symbols with exhausted remaining counts are skipped, and a
/// finished word is accepted by its final p value alone: p | n for
/// necklaces, p = n for Lyndon words. Words are emitted in strictly
/// increasing lexicographic order.
///
/// Each instance owns its state; distinct streams are independent, but a
/// single stream must not be shared mid-iteration.
class Generator {
public:
    Generator(const Content& content, GenKind kind);

    /// Next word, or nullopt once the stream is exhausted.
    std::optional<Word> next();

private:
    struct Frame {
        Symbol next_candidate;  // smallest symbol value not yet tried here
        std::size_t lyn_before; // lyn of the prefix below this position
    };

    GenKind kind_;
    Symbol k_;
    std::size_t n_;
    std::vector<Symbol> prefix_;
    std::vector<std::uint64_t> remaining_;
    std::vector<Frame> stack_;
};

/// Fully materialized stream.
std::vector<Word> generate_all(const Content& c, GenKind kind);

/// A necklace is stable when its length-(n-1) prefix is a Lyndon word.
/// Requires a necklace of length >= 2.
Stability classify(const Word& w);

struct NecklacePartition {
    std::vector<Word> stable;
    std::vector<Word> unstable;
};

/// All necklaces of the given content split by stability, each part in
/// lexicographic order. Requires every n_i >= 1 and total >= 2.
NecklacePartition partition_necklaces(const Content& c);

}  // namespace necklace
