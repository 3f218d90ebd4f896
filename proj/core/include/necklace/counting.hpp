#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "necklace/word.hpp"

namespace necklace {

/// Exact arbitrary-precision count. No floating point appears anywhere in
/// the counting paths; counts serialize as decimal strings via .str().
using BigCount = boost::multiprecision::cpp_int;

/// Euler's totient: number of integers in [1, m] coprime to m.
BigCount euler_phi(std::uint64_t m);

/// Moebius function: 0 when m has a squared prime factor, otherwise
/// (-1)^(number of prime factors).
int mobius(std::uint64_t m);

/// Ascending positive divisors of gcd(values), with gcd(0, x) = x.
/// At least one value must be nonzero.
std::vector<std::uint64_t> divisors_of_gcd(std::span<const std::uint64_t> values);

/// n! / (n_0! n_1! ... n_{k-1}!), exactly.
BigCount multinomial(const Content& c);

/// |N_k(n_0,...,n_{k-1})| = (1/n) sum_{j | gcd} phi(j) * (n/j)!/prod((n_i/j)!).
/// The division by n is performed last and checked to be exact.
BigCount count_necklaces(const Content& c);

/// |L_k(n_0,...,n_{k-1})|, same sum with the Moebius function.
BigCount count_lyndon(const Content& c);

/// sum_{i=0}^{k-1} L_k(..., n_i - 1, ...): the right-hand side of the
/// Pascal-like bound. Requires every n_i >= 1.
BigCount bound_rhs(const Content& c);

/// Binary shorthands: N(n,d) and L(n,d) for words of length n and density d.
BigCount binary_necklace_count(std::uint64_t n, std::uint64_t d);
BigCount binary_lyndon_count(std::uint64_t n, std::uint64_t d);

}  // namespace necklace
