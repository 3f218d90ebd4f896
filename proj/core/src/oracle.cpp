#include "necklace/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace necklace::oracle {

namespace {

// w <= rotation starting at r, with early exit at the first mismatch.
// Returns <0 / 0 / >0 like memcmp.
int compare_with_rotation(const Symbol* a, std::size_t n, std::size_t r) {
    for (std::size_t t = 0; t < n; ++t) {
        const Symbol x = a[t];
        const Symbol y = a[(r + t) % n];
        if (x != y)
            return x < y ? -1 : 1;
    }
    return 0;
}

bool scan_is_necklace(const Symbol* a, std::size_t n) {
    for (std::size_t r = 1; r < n; ++r)
        if (compare_with_rotation(a, n, r) > 0)
            return false;
    return true;
}

bool scan_is_lyndon(const Symbol* a, std::size_t n) {
    for (std::size_t r = 1; r < n; ++r)
        if (compare_with_rotation(a, n, r) >= 0)
            return false;
    return true;
}

void require_nonempty(const Word& w, const char* who) {
    if (w.empty())
        throw std::invalid_argument(std::string(who) + ": empty word");
}

}  // namespace

std::vector<Word> brute_words(const Content& c, std::size_t cap) {
    const std::uint64_t n = c.total();
    if (n == 0)
        throw std::invalid_argument("brute_words: content total must be >= 1");
    if (n > cap)
        throw std::invalid_argument("brute_words: content total exceeds the oracle cap");
    std::vector<Symbol> current;
    current.reserve(n);
    for (std::size_t s = 0; s < c.alphabet_size(); ++s)
        current.insert(current.end(), c.counts()[s], static_cast<Symbol>(s));
    const Symbol k = static_cast<Symbol>(c.alphabet_size());
    std::vector<Word> out;
    do {
        out.emplace_back(current, k);
    } while (std::next_permutation(current.begin(), current.end()));
    return out;
}

std::vector<Word> brute_necklaces(const Content& c, std::size_t cap) {
    std::vector<Word> out;
    for (Word& w : brute_words(c, cap))
        if (scan_is_necklace(w.symbols().data(), w.size()))
            out.push_back(std::move(w));
    return out;
}

std::vector<Word> brute_lyndon(const Content& c, std::size_t cap) {
    std::vector<Word> out;
    for (Word& w : brute_words(c, cap))
        if (scan_is_lyndon(w.symbols().data(), w.size()))
            out.push_back(std::move(w));
    return out;
}

std::vector<Word> brute_prenecklaces(const Content& c, std::size_t cap) {
    std::vector<Word> out;
    for (Word& w : brute_words(c, cap))
        if (oracle::is_prenecklace(w))
            out.push_back(std::move(w));
    return out;
}

bool is_necklace(const Word& w) {
    require_nonempty(w, "oracle::is_necklace");
    return scan_is_necklace(w.symbols().data(), w.size());
}

bool is_lyndon(const Word& w) {
    require_nonempty(w, "oracle::is_lyndon");
    return scan_is_lyndon(w.symbols().data(), w.size());
}

bool is_prenecklace(const Word& w) {
    require_nonempty(w, "oracle::is_prenecklace");
    const std::size_t n = w.size();
    std::vector<Symbol> buffer(w.symbols().begin(), w.symbols().end());
    buffer.resize(3 * n, w.alphabet_size() - 1);
    for (std::size_t t = 0; t <= 2 * n; ++t)
        if (scan_is_necklace(buffer.data(), n + t))
            return true;
    return false;
}

std::size_t lyn(const Word& w) {
    require_nonempty(w, "oracle::lyn");
    std::size_t best = 1;
    for (std::size_t p = 1; p <= w.size(); ++p)
        if (scan_is_lyndon(w.symbols().data(), p))
            best = p;
    return best;
}

}  // namespace necklace::oracle
