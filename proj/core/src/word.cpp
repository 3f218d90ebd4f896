#include "necklace/word.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace necklace {

Word::Word(std::vector<Symbol> symbols, Symbol alphabet_size)
    : symbols_(std::move(symbols)), k_(alphabet_size) {
    if (k_ < 2)
        throw std::invalid_argument("word: alphabet size must be at least 2");
    for (Symbol s : symbols_)
        if (s >= k_)
            throw std::invalid_argument("word: symbol out of range for alphabet");
}

Word Word::prefix(std::size_t length) const {
    if (length > size())
        throw std::invalid_argument("word: prefix length exceeds word length");
    return Word(std::vector<Symbol>(symbols_.begin(), symbols_.begin() + length), k_);
}

std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept {
    auto cmp = std::lexicographical_compare_three_way(
        a.symbols_.begin(), a.symbols_.end(), b.symbols_.begin(), b.symbols_.end());
    if (cmp != std::strong_ordering::equal)
        return cmp;
    return a.k_ <=> b.k_;
}

Content::Content(std::vector<std::uint64_t> counts) : counts_(std::move(counts)), total_(0) {
    if (counts_.size() < 2)
        throw std::invalid_argument("content: alphabet size must be at least 2");
    for (std::uint64_t c : counts_)
        total_ += c;
}

Content Content::binary(std::uint64_t zeros, std::uint64_t ones) {
    return Content({zeros, ones});
}

Content Content::binary_density(std::uint64_t n, std::uint64_t d) {
    if (d > n)
        throw std::invalid_argument("content: density exceeds length");
    return Content({n - d, d});
}

std::uint64_t Content::count(std::size_t symbol) const {
    if (symbol >= counts_.size())
        throw std::invalid_argument("content: symbol out of range");
    return counts_[symbol];
}

Content Content::decremented(std::size_t symbol) const {
    if (count(symbol) == 0)
        throw std::invalid_argument("content: cannot decrement a zero count");
    std::vector<std::uint64_t> c = counts_;
    --c[symbol];
    return Content(std::move(c));
}

bool operator==(const Content& a, const Content& b) noexcept {
    return a.counts_ == b.counts_;
}

std::strong_ordering lex_compare(const Word& a, const Word& b) {
    if (a.alphabet_size() != b.alphabet_size())
        throw std::invalid_argument("lex_compare: mismatched alphabet sizes");
    auto as = a.symbols(), bs = b.symbols();
    return std::lexicographical_compare_three_way(as.begin(), as.end(), bs.begin(), bs.end());
}

Word rotate(const Word& w, std::size_t r) {
    const std::size_t n = w.size();
    if (r >= std::max<std::size_t>(1, n))
        throw std::invalid_argument("rotate: offset out of range");
    std::vector<Symbol> out(w.symbols().begin(), w.symbols().end());
    std::rotate(out.begin(), out.begin() + r, out.end());
    return Word(std::move(out), w.alphabet_size());
}

namespace {

// Longest-Lyndon-prefix length maintained under the prenecklace extension
// rule (extend a prenecklace of lyn p by b only when a_{m-p} <= b; the new
// lyn is p when equal, m+1 when greater). Returns 0 when some extension step
// fails, i.e. the word is not a prenecklace.
std::size_t prenecklace_lyn(std::span<const Symbol> a) {
    std::size_t p = 1;
    for (std::size_t m = 1; m < a.size(); ++m) {
        const Symbol floor = a[m - p];
        if (a[m] < floor)
            return 0;
        if (a[m] > floor)
            p = m + 1;
    }
    return p;
}

void require_nonempty(const Word& w, const char* who) {
    if (w.empty())
        throw std::invalid_argument(std::string(who) + ": empty word");
}

}  // namespace

bool is_necklace(const Word& w) {
    require_nonempty(w, "is_necklace");
    const std::size_t p = prenecklace_lyn(w.symbols());
    return p != 0 && w.size() % p == 0;
}

bool is_lyndon(const Word& w) {
    require_nonempty(w, "is_lyndon");
    return lyn(w) == w.size();
}

bool is_prenecklace(const Word& w) {
    require_nonempty(w, "is_prenecklace");
    return prenecklace_lyn(w.symbols()) != 0;
}

std::size_t lyn(const Word& w) {
    require_nonempty(w, "lyn");
    // Duval: length of the first factor of the Chen-Fox-Lyndon factorization,
    // which is the longest Lyndon prefix.
    const auto a = w.symbols();
    std::size_t i = 0, j = 1;
    while (j < a.size() && a[i] <= a[j]) {
        i = (a[i] < a[j]) ? 0 : i + 1;
        ++j;
    }
    return j - i;
}

std::size_t min_rotation(const Word& w) {
    require_nonempty(w, "min_rotation");
    const auto a = w.symbols();
    const std::size_t n = a.size();
    std::size_t i = 0, j = 1, len = 0;
    while (i < n && j < n && len < n) {
        const Symbol ci = a[(i + len) % n];
        const Symbol cj = a[(j + len) % n];
        if (ci == cj) {
            ++len;
            continue;
        }
        if (ci > cj)
            i += len + 1;
        else
            j += len + 1;
        if (i == j)
            ++j;
        len = 0;
    }
    return std::min(i, j);
}

Content content_of(const Word& w) {
    std::vector<std::uint64_t> counts(w.alphabet_size(), 0);
    for (Symbol s : w.symbols())
        ++counts[s];
    return Content(std::move(counts));
}

std::string to_string(const Word& w) {
    std::string out;
    if (w.alphabet_size() <= 10) {
        out.reserve(w.size());
        for (Symbol s : w.symbols())
            out.push_back(static_cast<char>('0' + s));
    } else {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i)
                out.push_back(',');
            out += std::to_string(w[i]);
        }
    }
    return out;
}

Word parse_word(std::string_view text, std::optional<Symbol> alphabet_size) {
    std::vector<Symbol> symbols;
    if (text.find(',') != std::string_view::npos) {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const std::size_t next = std::min(text.find(',', pos), text.size());
            const std::string_view tok = text.substr(pos, next - pos);
            Symbol value = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc() || ptr != tok.data() + tok.size())
                throw std::invalid_argument("parse_word: bad symbol token");
            symbols.push_back(value);
            if (next == text.size())
                break;
            pos = next + 1;
        }
    } else {
        symbols.reserve(text.size());
        for (char ch : text) {
            if (ch < '0' || ch > '9')
                throw std::invalid_argument("parse_word: expected decimal digits");
            symbols.push_back(static_cast<Symbol>(ch - '0'));
        }
    }
    Symbol k;
    if (alphabet_size) {
        k = *alphabet_size;
    } else {
        k = 2;
        for (Symbol s : symbols)
            k = std::max(k, s + 1);
    }
    return Word(std::move(symbols), k);
}

std::string to_string(const Content& c) {
    std::string out;
    for (std::size_t i = 0; i < c.alphabet_size(); ++i) {
        if (i)
            out.push_back(',');
        out += std::to_string(c.counts()[i]);
    }
    return out;
}

}  // namespace necklace
