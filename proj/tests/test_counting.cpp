#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "helpers.hpp"
#include "necklace/counting.hpp"
#include "necklace/oracle.hpp"

using namespace necklace;
using necklace::testing::for_each_content;

namespace {

// Independent totient for the cross-check below: count coprimes directly.
std::uint64_t slow_phi(std::uint64_t m) {
    std::uint64_t count = 0;
    for (std::uint64_t t = 1; t <= m; ++t)
        if (std::gcd(t, m) == 1)
            ++count;
    return count;
}

}  // namespace

TEST_CASE("euler_phi") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(6) == 2);
    CHECK(euler_phi(12) == 4);
    CHECK_THROWS_AS(euler_phi(0), std::invalid_argument);
    for (std::uint64_t m = 1; m <= 300; ++m)
        CHECK(euler_phi(m) == slow_phi(m));
}

TEST_CASE("mobius") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(4) == 0);
    CHECK(mobius(6) == 1);
    CHECK(mobius(30) == -1);
    CHECK_THROWS_AS(mobius(0), std::invalid_argument);
    // sum_{d | m} mu(d) = [m = 1]
    for (std::uint64_t m = 1; m <= 200; ++m) {
        int sum = 0;
        for (std::uint64_t d = 1; d <= m; ++d)
            if (m % d == 0)
                sum += mobius(d);
        CHECK(sum == (m == 1 ? 1 : 0));
    }
}

TEST_CASE("divisors_of_gcd") {
    CHECK(divisors_of_gcd(std::vector<std::uint64_t>{6, 3}) ==
          std::vector<std::uint64_t>{1, 3});
    CHECK(divisors_of_gcd(std::vector<std::uint64_t>{4, 2, 2}) ==
          std::vector<std::uint64_t>{1, 2});
    CHECK(divisors_of_gcd(std::vector<std::uint64_t>{5, 3}) == std::vector<std::uint64_t>{1});
    CHECK(divisors_of_gcd(std::vector<std::uint64_t>{0, 12}) ==
          std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
    CHECK_THROWS_AS(divisors_of_gcd(std::vector<std::uint64_t>{0, 0}), std::invalid_argument);
}

TEST_CASE("multinomial") {
    CHECK(multinomial(Content({2, 2})) == 6);
    CHECK(multinomial(Content({1, 1, 1})) == 6);
    CHECK(multinomial(Content({0, 0})) == 1);
    CHECK(multinomial(Content({3, 0, 1})) == 4);
}

TEST_CASE("count_necklaces spec values") {
    CHECK(count_necklaces(Content({2, 2})) == 2);
    CHECK(count_necklaces(Content({3, 3})) == 4);
    for (std::uint64_t n = 1; n <= 8; ++n)
        CHECK(binary_necklace_count(n, 0) == 1);
    CHECK_THROWS_AS(count_necklaces(Content({0, 0})), std::invalid_argument);
}

TEST_CASE("count_lyndon spec values") {
    CHECK(count_lyndon(Content({2, 2})) == 1);
    CHECK(count_lyndon(Content({2, 3})) == 2);
    CHECK(binary_lyndon_count(1, 0) == 1);
    for (std::uint64_t n = 2; n <= 8; ++n)
        CHECK(binary_lyndon_count(n, 0) == 0);
}

TEST_CASE("bound_rhs spec values") {
    CHECK(bound_rhs(Content({3, 3})) == 4);
    CHECK(bound_rhs(Content({1, 1, 1})) == 3);
    CHECK(bound_rhs(Content({2, 2})) == 2);
    CHECK_THROWS_AS(bound_rhs(Content({2, 0})), std::invalid_argument);
}

TEST_CASE("formula counts equal oracle cardinalities up to n = 10, k <= 3") {
    for (std::size_t k = 2; k <= 3; ++k) {
        for (std::uint64_t total = 1; total <= (k == 2 ? 10 : 9); ++total) {
            for_each_content(k, total, 0, [&](const Content& c) {
                CAPTURE(to_string(c));
                CHECK(count_necklaces(c) == BigCount(oracle::brute_necklaces(c).size()));
                CHECK(count_lyndon(c) == BigCount(oracle::brute_lyndon(c).size()));
                CHECK(multinomial(c) == BigCount(oracle::brute_words(c).size()));
            });
        }
    }
}

TEST_CASE("density symmetry N(n,d) = N(n,n-d), L likewise, n <= 30") {
    for (std::uint64_t n = 1; n <= 30; ++n) {
        for (std::uint64_t d = 0; d <= n; ++d) {
            CHECK(binary_necklace_count(n, d) == binary_necklace_count(n, n - d));
            CHECK(binary_lyndon_count(n, d) == binary_lyndon_count(n, n - d));
        }
    }
}

TEST_CASE("density counts sum to the unrestricted necklace count") {
    // Independent route: (1/n) sum_{j | n} phi(j) 2^{n/j} with a gcd-counting phi.
    for (std::uint64_t n = 1; n <= 30; ++n) {
        BigCount total = 0;
        for (std::uint64_t d = 0; d <= n; ++d)
            total += binary_necklace_count(n, d);
        BigCount unrestricted = 0;
        for (std::uint64_t j = 1; j <= n; ++j) {
            if (n % j)
                continue;
            BigCount pow2 = 1;
            pow2 <<= static_cast<unsigned>(n / j);
            unrestricted += BigCount(slow_phi(j)) * pow2;
        }
        CHECK(unrestricted % n == 0);
        CHECK(total == unrestricted / n);
    }
}

TEST_CASE("L <= N with equality exactly for coprime contents, n <= 12") {
    for (std::size_t k = 2; k <= 3; ++k) {
        for (std::uint64_t total = 1; total <= 12; ++total) {
            for_each_content(k, total, 0, [&](const Content& c) {
                CAPTURE(to_string(c));
                const BigCount n = count_necklaces(c);
                const BigCount l = count_lyndon(c);
                CHECK(l <= n);
                std::uint64_t g = 0;
                for (std::uint64_t v : c.counts())
                    g = std::gcd(g, v);
                CHECK((l == n) == (g == 1));
            });
        }
    }
}

TEST_CASE("Pascal-like bound via formulas up to n = 64") {
    for (std::uint64_t n = 2; n <= 64; ++n)
        for (std::uint64_t d = 1; d < n; ++d)
            CHECK(binary_necklace_count(n, d) <=
                  binary_lyndon_count(n - 1, d) + binary_lyndon_count(n - 1, d - 1));
}

TEST_CASE("counts survive the decimal-string round trip") {
    const BigCount big = binary_necklace_count(100, 50);
    CHECK(big > std::numeric_limits<std::uint64_t>::max());
    CHECK(BigCount(big.str()) == big);
}
