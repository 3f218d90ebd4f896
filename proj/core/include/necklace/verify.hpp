#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

namespace necklace {

struct VerificationFailure {
    std::string instance;
    std::string expected;
    std::string actual;
};

/// Structured pass/fail record for an exhaustive sweep.
struct VerificationReport {
    std::string scope;
    std::uint64_t instances_checked = 0;
    std::vector<VerificationFailure> failures;
    std::chrono::duration<double> elapsed{0};

    bool passed() const noexcept { return failures.empty(); }
};

/// N(n,d) <= L(n-1,d) + L(n-1,d-1) via the exact formulas, for all
/// 0 < d < n with n <= max_n.
VerificationReport verify_bound(std::uint64_t max_n);

/// For every content over the given alphabet with all counts >= 1 and total
/// <= max_n: the image of f is injective and lands in the Lyndon set of the
/// zero-decremented content, |S| + |U| = N, |S| matches its Lyndon-sum
/// formula, and for k > 2 the bound is strict both by formulas and by
/// |image| < L(n_0 - 1, ...).
VerificationReport verify_injectivity(std::uint64_t max_n, std::size_t alphabet_size);

/// Equality classification vs direct formula comparison for all 0 < d < n,
/// n <= max_n, including the fixed six-pair equality set for 2 < d < n-2.
VerificationReport verify_equality(std::uint64_t max_n);

/// Constructive witnesses against exhaustively computed images of f:
/// nonsurjectivity witnesses for k = 3 contents with total <= min(max_n, 10),
/// and binary strict witnesses for 11 <= n <= max_n.
VerificationReport verify_witnesses(std::uint64_t max_n);

/// Pairwise agreement of the counting formulas, the generator streams, and
/// the brute-force oracle sets, for every content with total <= max_n over
/// alphabets 2..max_alphabet, plus binary contents up to binary_max_n.
VerificationReport verify_oracle(std::uint64_t max_n, std::size_t max_alphabet,
                                 std::uint64_t binary_max_n);

}  // namespace necklace
