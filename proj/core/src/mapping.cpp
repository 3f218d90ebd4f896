#include "necklace/mapping.hpp"

#include <array>
#include <stdexcept>
#include <utility>

#include "necklace/counting.hpp"
#include "necklace/generation.hpp"

namespace necklace {

UnstableDecomposition decompose(const Word& w) {
    const std::size_t n = w.size();
    if (n < 2)
        throw std::invalid_argument("decompose: word must have length >= 2");
    for (std::uint64_t v : content_of(w).counts())
        if (v == 0)
            throw std::invalid_argument("decompose: every alphabet symbol must occur");
    if (!is_necklace(w))
        throw std::invalid_argument("decompose: input is not a necklace");
    const Word head = w.prefix(n - 1);
    if (is_lyndon(head))
        throw std::invalid_argument("decompose: necklace is stable");

    const std::size_t p = lyn(head);
    const std::size_t i = (n - 2) % p + 1;
    const std::size_t j = (n - 1 - i) / p;
    // w' = (a_1...a_p)^j a_1...a_i means w'[t] repeats with period p.
    for (std::size_t t = p; t + 1 < n; ++t)
        if (w[t] != w[t % p])
            throw std::logic_error("decompose: prefix does not factor over its Lyndon prefix");

    std::size_t z = 0;
    for (std::size_t t = i; t >= 1; --t) {
        if (w[t - 1] == 0) {
            z = t;
            break;
        }
    }
    if (z == 0)
        throw std::logic_error("decompose: necklace does not start with 0");
    const Symbol x = w[n - 1];
    if (x == 0)
        throw std::logic_error("decompose: unstable necklace ends with 0");
    return {p, j, i, z, x};
}

Word apply_f(const Word& w) {
    const UnstableDecomposition d = decompose(w);
    const std::size_t n = w.size();
    const std::size_t z = d.last_zero;

    std::vector<Symbol> out;
    out.reserve(n - 1);
    for (std::size_t t = 0; t < d.repetitions * d.period; ++t)
        out.push_back(w[t]);
    if (d.zero_ends_tail()) {
        for (std::size_t t = 0; t + 1 < z; ++t)
            out.push_back(w[t]);
        out.push_back(d.trailing_symbol);
    } else {
        out.push_back(d.trailing_symbol);
        for (std::size_t t = d.tail_length; t >= z + 2; --t)  // a_i ... a_{z+2}, possibly empty
            out.push_back(w[t - 1]);
        for (std::size_t t = 0; t + 1 < z; ++t)
            out.push_back(w[t]);
        out.push_back(w[z]);  // a_{z+1}
    }

    Word image(std::move(out), w.alphabet_size());
    if (image.size() != n - 1)
        throw std::logic_error("apply_f: image has the wrong length");
    if (!(content_of(image) == content_of(w).decremented(0)))
        throw std::logic_error("apply_f: image has the wrong content");
    if (!is_lyndon(image))
        throw std::logic_error("apply_f: image is not a Lyndon word");
    return image;
}

std::set<Word> image_of_f(const Content& c) {
    const NecklacePartition parts = partition_necklaces(c);
    std::set<Word> image;
    for (const Word& w : parts.unstable)
        image.insert(apply_f(w));
    if (image.size() != parts.unstable.size())
        throw std::logic_error("image_of_f: map is not injective on the unstable necklaces");
    return image;
}

namespace {

void append_run(std::vector<Symbol>& v, Symbol s, std::uint64_t times) {
    v.insert(v.end(), times, s);
}

Word checked_witness(std::vector<Symbol> symbols, Symbol k, const Content& target,
                     const char* who) {
    Word w(std::move(symbols), k);
    if (!(content_of(w) == target))
        throw std::logic_error(std::string(who) + ": witness has the wrong content");
    if (!is_lyndon(w))
        throw std::logic_error(std::string(who) + ": witness is not a Lyndon word");
    return w;
}

}  // namespace

std::optional<Word> nonsurjectivity_witness(const Content& c) {
    const std::size_t k = c.alphabet_size();
    if (k == 2)
        return std::nullopt;
    for (std::uint64_t v : c.counts())
        if (v == 0)
            throw std::invalid_argument("nonsurjectivity_witness: every symbol count must be >= 1");

    const std::uint64_t n0 = c.count(0);
    std::vector<Symbol> v;
    v.reserve(c.total() - 1);
    if (n0 == 1) {
        // The unstable set is empty; any Lyndon word of the target content
        // works, e.g. the ascending arrangement.
        for (std::size_t s = 1; s < k; ++s)
            append_run(v, static_cast<Symbol>(s), c.count(s));
    } else if (n0 == 2) {
        // 0 (k-1)^{n_{k-1}} ... 2^{n_2} 1^{n_1}
        v.push_back(0);
        for (std::size_t s = k - 1; s >= 1; --s)
            append_run(v, static_cast<Symbol>(s), c.count(s));
    } else if (n0 % 2 == 1) {
        // n_0 = 2j+1:  0^j 1^{n_1} 2^{n_2} ... (k-1)^{n_{k-1}-1} 0^j (k-1)
        const std::uint64_t j = (n0 - 1) / 2;
        append_run(v, 0, j);
        for (std::size_t s = 1; s + 1 < k; ++s)
            append_run(v, static_cast<Symbol>(s), c.count(s));
        append_run(v, static_cast<Symbol>(k - 1), c.count(k - 1) - 1);
        append_run(v, 0, j);
        v.push_back(static_cast<Symbol>(k - 1));
    } else {
        // n_0 = 2j, j >= 2:  0^j (k-1)^{n_{k-1}} ... 2^{n_2} 1^{n_1-1} 0^{j-1} 1
        const std::uint64_t j = n0 / 2;
        append_run(v, 0, j);
        for (std::size_t s = k - 1; s >= 2; --s)
            append_run(v, static_cast<Symbol>(s), c.count(s));
        append_run(v, 1, c.count(1) - 1);
        append_run(v, 0, j - 1);
        v.push_back(1);
    }
    return checked_witness(std::move(v), static_cast<Symbol>(k), c.decremented(0),
                           "nonsurjectivity_witness");
}

std::optional<Word> strict_witness(std::uint64_t n, std::uint64_t d) {
    if (d == 0 || d >= n)
        throw std::invalid_argument("strict_witness: need 0 < d < n");
    const std::uint64_t z = n - d;
    if (n <= 10 || z <= 2 || 2 * z > n)
        return std::nullopt;

    std::vector<Symbol> v;
    v.reserve(n - 1);
    if (z == 3) {
        // 0 1^a 0 1^{a+1} (n even) or 0 1^a 0 1^{a+2} (n odd)
        const std::uint64_t a = n % 2 == 0 ? (n - 4) / 2 : (n - 5) / 2;
        v.push_back(0);
        append_run(v, 1, a);
        v.push_back(0);
        append_run(v, 1, n % 2 == 0 ? a + 1 : a + 2);
    } else if (z == 4) {
        // 0 1^{r1} 0 1^{r2} 0 1^{r3}, run lengths by (n-1) mod 3
        std::uint64_t a;
        std::array<std::uint64_t, 3> runs;
        switch ((n - 1) % 3) {
        case 1:
            a = (n - 5) / 3;
            runs = {a, a, a + 1};
            break;
        case 2:
            a = (n - 6) / 3;
            runs = {a, a + 1, a + 1};
            break;
        default:
            a = (n - 7) / 3;
            runs = {a, a + 1, a + 2};
            break;
        }
        for (std::uint64_t r : runs) {
            v.push_back(0);
            append_run(v, 1, r);
        }
    } else {
        // z >= 5:  0 0 1^a 0 1 (0 1)^b with b = z-4, a = n-2z+3
        const std::uint64_t b = z - 4;
        const std::uint64_t a = n - 2 * z + 3;
        v.push_back(0);
        v.push_back(0);
        append_run(v, 1, a);
        for (std::uint64_t t = 0; t <= b; ++t) {
            v.push_back(0);
            v.push_back(1);
        }
    }
    return checked_witness(std::move(v), 2, Content::binary(z - 1, d), "strict_witness");
}

EqualityStatus equality_status(std::uint64_t n, std::uint64_t d) {
    if (d == 0 || d >= n)
        throw std::invalid_argument("equality_status: need 0 < d < n");
    static const std::set<std::pair<std::uint64_t, std::uint64_t>> kEqualityPairs = {
        {6, 3}, {7, 3}, {7, 4}, {8, 4}, {9, 3}, {9, 6}};
    const bool near_edge = d == 1 || d == 2 || d == n - 2 || d == n - 1;
    const bool equality =
        (near_edge && !(n == 2 && d == 1)) || kEqualityPairs.contains({n, d});

    if (n <= 64) {
        const bool formula_equality =
            binary_necklace_count(n, d) == bound_rhs(Content::binary_density(n, d));
        if (formula_equality != equality)
            throw std::logic_error("equality_status: classification disagrees with the formulas");
    }

    std::optional<Word> witness;
    if (!equality && n > 10) {
        witness = strict_witness(n, d);
        if (!witness)
            witness = strict_witness(n, n - d);
    }
    return {equality, std::move(witness)};
}

}  // namespace necklace
