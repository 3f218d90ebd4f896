#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "necklace/word.hpp"

namespace necklace::testing {

/// All words of length n over {0,...,k-1}, in lexicographic (odometer) order.
inline std::vector<Word> all_words(Symbol k, std::size_t n) {
    std::vector<Word> out;
    std::vector<Symbol> current(n, 0);
    while (true) {
        out.emplace_back(current, k);
        std::size_t pos = n;
        while (pos > 0 && current[pos - 1] + 1 == k)
            current[--pos] = 0;
        if (pos == 0)
            break;
        ++current[pos - 1];
    }
    return out;
}

/// Every content over the given alphabet with the given total, each count at
/// least min_count.
inline void for_each_content(std::size_t alphabet, std::uint64_t total,
                             std::uint64_t min_count,
                             const std::function<void(const Content&)>& fn) {
    std::vector<std::uint64_t> counts(alphabet, 0);
    std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t pos,
                                                              std::uint64_t left) {
        if (pos + 1 == alphabet) {
            if (left < min_count)
                return;
            counts[pos] = left;
            fn(Content(counts));
            return;
        }
        for (std::uint64_t v = min_count; v + min_count * (alphabet - pos - 1) <= left; ++v) {
            counts[pos] = v;
            rec(pos + 1, left - v);
        }
    };
    rec(0, total);
}

}  // namespace necklace::testing
