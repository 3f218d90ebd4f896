#include "necklace/counting.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace necklace {

namespace {

using Factorization = std::vector<std::pair<std::uint64_t, int>>;

// Trial division with a per-thread memo; arguments stay desk-scale (divisors
// of content gcds), so no sieve.
const Factorization& factorize(std::uint64_t m) {
    thread_local std::unordered_map<std::uint64_t, Factorization> memo;
    auto it = memo.find(m);
    if (it != memo.end())
        return it->second;
    Factorization factors;
    std::uint64_t rest = m;
    for (std::uint64_t p = 2; p * p <= rest; ++p) {
        if (rest % p)
            continue;
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        factors.emplace_back(p, e);
    }
    if (rest > 1)
        factors.emplace_back(rest, 1);
    return memo.emplace(m, std::move(factors)).first->second;
}

BigCount binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    BigCount r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact at every step in this order
    }
    return r;
}

BigCount scaled_multinomial(const Content& c, std::uint64_t j) {
    BigCount r = 1;
    std::uint64_t placed = 0;
    for (std::uint64_t v : c.counts()) {
        placed += v / j;
        r *= binomial(placed, v / j);
    }
    return r;
}

BigCount necklace_sum(const Content& c, bool lyndon) {
    const std::uint64_t n = c.total();
    if (n == 0)
        throw std::invalid_argument("count: content total must be >= 1");
    BigCount sum = 0;
    for (std::uint64_t j : divisors_of_gcd(c.counts())) {
        if (lyndon) {
            const int mu = mobius(j);
            if (mu == 0)
                continue;
            sum += mu * scaled_multinomial(c, j);
        } else {
            sum += euler_phi(j) * scaled_multinomial(c, j);
        }
    }
    const BigCount quotient = sum / n;
    if (quotient * n != sum)
        throw std::logic_error("count: divisor sum not divisible by n");
    return quotient;
}

}  // namespace

BigCount euler_phi(std::uint64_t m) {
    if (m == 0)
        throw std::invalid_argument("euler_phi: argument must be >= 1");
    BigCount phi = 1;
    for (const auto& [p, e] : factorize(m)) {
        BigCount pe = p;
        for (int t = 1; t < e; ++t)
            pe *= p;
        phi *= pe - pe / p;
    }
    return phi;
}

int mobius(std::uint64_t m) {
    if (m == 0)
        throw std::invalid_argument("mobius: argument must be >= 1");
    const auto& factors = factorize(m);
    for (const auto& [p, e] : factors)
        if (e > 1)
            return 0;
    return factors.size() % 2 == 0 ? 1 : -1;
}

std::vector<std::uint64_t> divisors_of_gcd(std::span<const std::uint64_t> values) {
    std::uint64_t g = 0;
    for (std::uint64_t v : values)
        g = std::gcd(g, v);
    if (g == 0)
        throw std::invalid_argument("divisors_of_gcd: all values are zero");
    std::vector<std::uint64_t> divisors;
    for (std::uint64_t d = 1; d * d <= g; ++d) {
        if (g % d)
            continue;
        divisors.push_back(d);
        if (d != g / d)
            divisors.push_back(g / d);
    }
    std::sort(divisors.begin(), divisors.end());
    return divisors;
}

BigCount multinomial(const Content& c) {
    return scaled_multinomial(c, 1);
}

BigCount count_necklaces(const Content& c) {
    return necklace_sum(c, false);
}

BigCount count_lyndon(const Content& c) {
    return necklace_sum(c, true);
}

BigCount bound_rhs(const Content& c) {
    for (std::uint64_t v : c.counts())
        if (v == 0)
            throw std::invalid_argument("bound_rhs: every symbol count must be >= 1");
    BigCount sum = 0;
    for (std::size_t i = 0; i < c.alphabet_size(); ++i)
        sum += count_lyndon(c.decremented(i));
    return sum;
}

BigCount binary_necklace_count(std::uint64_t n, std::uint64_t d) {
    return count_necklaces(Content::binary_density(n, d));
}

BigCount binary_lyndon_count(std::uint64_t n, std::uint64_t d) {
    return count_lyndon(Content::binary_density(n, d));
}

}  // namespace necklace
