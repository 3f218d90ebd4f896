#include "necklace/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <utility>

#include "necklace/counting.hpp"
#include "necklace/generation.hpp"
#include "necklace/mapping.hpp"
#include "necklace/oracle.hpp"
#include "necklace/word.hpp"

namespace necklace {

namespace {

using Clock = std::chrono::steady_clock;

class ReportBuilder {
public:
    explicit ReportBuilder(std::string scope) : start_(Clock::now()) {
        report_.scope = std::move(scope);
    }

    void fail(std::string instance, std::string expected, std::string actual) {
        report_.failures.push_back({std::move(instance), std::move(expected), std::move(actual)});
    }

    void check(bool ok, const std::string& instance, std::string expected, std::string actual) {
        if (!ok)
            fail(instance, std::move(expected), std::move(actual));
    }

    // One instance = one (content) or one (n,d) pair; body exceptions become
    // failures so a sweep always produces a full report.
    void instance(const std::string& name, const std::function<void()>& body) {
        ++report_.instances_checked;
        try {
            body();
        } catch (const std::exception& e) {
            fail(name, "no exception", e.what());
        }
    }

    VerificationReport finish() {
        report_.elapsed = Clock::now() - start_;
        return std::move(report_);
    }

private:
    VerificationReport report_;
    Clock::time_point start_;
};

void for_each_content(std::size_t alphabet, std::uint64_t total, std::uint64_t min_count,
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

std::string pair_name(std::uint64_t n, std::uint64_t d) {
    return "(n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")";
}

}  // namespace

VerificationReport verify_bound(std::uint64_t max_n) {
    ReportBuilder rb("bound: N(n,d) <= L(n-1,d) + L(n-1,d-1) for 0 < d < n <= " +
                     std::to_string(max_n));
    for (std::uint64_t n = 2; n <= max_n; ++n) {
        for (std::uint64_t d = 1; d < n; ++d) {
            rb.instance(pair_name(n, d), [&] {
                const BigCount lhs = binary_necklace_count(n, d);
                const BigCount rhs = bound_rhs(Content::binary_density(n, d));
                rb.check(lhs <= rhs, pair_name(n, d), "N <= rhs",
                         "N=" + lhs.str() + " rhs=" + rhs.str());
            });
        }
    }
    return rb.finish();
}

VerificationReport verify_injectivity(std::uint64_t max_n, std::size_t alphabet_size) {
    ReportBuilder rb("injectivity/partition: k=" + std::to_string(alphabet_size) +
                     ", positive contents with n <= " + std::to_string(max_n));
    for (std::uint64_t total = std::max<std::uint64_t>(2, alphabet_size); total <= max_n;
         ++total) {
        for_each_content(alphabet_size, total, 1, [&](const Content& c) {
            const std::string name = "content " + to_string(c);
            rb.instance(name, [&] {
                const NecklacePartition parts = partition_necklaces(c);
                std::set<Word> image;
                for (const Word& w : parts.unstable)
                    image.insert(apply_f(w));

                rb.check(image.size() == parts.unstable.size(), name, "|image(f)| = |U|",
                         std::to_string(image.size()) + " vs " +
                             std::to_string(parts.unstable.size()));

                const std::vector<Word> lyndon_down =
                    generate_all(c.decremented(0), GenKind::lyndon);
                rb.check(std::includes(lyndon_down.begin(), lyndon_down.end(), image.begin(),
                                       image.end()),
                         name, "image(f) within the Lyndon set of the 0-decremented content",
                         "some image word is missing");

                const BigCount necklaces = count_necklaces(c);
                rb.check(BigCount(parts.stable.size()) + parts.unstable.size() == necklaces,
                         name, "|S| + |U| = N", std::to_string(parts.stable.size()) + "+" +
                                                    std::to_string(parts.unstable.size()) +
                                                    " vs " + necklaces.str());

                BigCount stable_sum = 0;
                for (std::size_t s = 1; s < alphabet_size; ++s)
                    stable_sum += count_lyndon(c.decremented(s));
                rb.check(BigCount(parts.stable.size()) == stable_sum, name,
                         "|S| = sum of decremented Lyndon counts (i >= 1)",
                         std::to_string(parts.stable.size()) + " vs " + stable_sum.str());

                const BigCount lyndon_zero = count_lyndon(c.decremented(0));
                rb.check(BigCount(parts.unstable.size()) <= lyndon_zero, name,
                         "|U| <= L(n_0 - 1, ...)",
                         std::to_string(parts.unstable.size()) + " vs " + lyndon_zero.str());

                const BigCount rhs = bound_rhs(c);
                rb.check(necklaces <= rhs, name, "N <= rhs",
                         necklaces.str() + " vs " + rhs.str());
                if (alphabet_size > 2) {
                    rb.check(necklaces < rhs, name, "N < rhs (strict for k > 2)",
                             necklaces.str() + " vs " + rhs.str());
                    rb.check(BigCount(image.size()) < lyndon_zero, name,
                             "|image(f)| < L(n_0 - 1, ...) (strict for k > 2)",
                             std::to_string(image.size()) + " vs " + lyndon_zero.str());
                }
            });
        });
    }
    return rb.finish();
}

VerificationReport verify_equality(std::uint64_t max_n) {
    ReportBuilder rb("equality: classification vs formulas for 0 < d < n <= " +
                     std::to_string(max_n));
    static const std::set<std::pair<std::uint64_t, std::uint64_t>> kEqualityPairs = {
        {6, 3}, {7, 3}, {7, 4}, {8, 4}, {9, 3}, {9, 6}};
    std::set<std::pair<std::uint64_t, std::uint64_t>> interior_equalities;
    for (std::uint64_t n = 2; n <= max_n; ++n) {
        for (std::uint64_t d = 1; d < n; ++d) {
            rb.instance(pair_name(n, d), [&] {
                const bool formula_equality =
                    binary_necklace_count(n, d) ==
                    bound_rhs(Content::binary_density(n, d));
                const EqualityStatus status = equality_status(n, d);
                rb.check(status.equality == formula_equality, pair_name(n, d),
                         formula_equality ? "equality" : "strict",
                         status.equality ? "equality" : "strict");
                if (formula_equality && d > 2 && d < n - 2)
                    interior_equalities.insert({n, d});
            });
        }
    }
    std::set<std::pair<std::uint64_t, std::uint64_t>> expected;
    for (const auto& p : kEqualityPairs)
        if (p.first <= max_n)
            expected.insert(p);
    rb.check(interior_equalities == expected, "equality set for 2 < d < n-2",
             std::to_string(expected.size()) + " pairs",
             std::to_string(interior_equalities.size()) + " pairs");
    return rb.finish();
}

VerificationReport verify_witnesses(std::uint64_t max_n) {
    ReportBuilder rb("witnesses: constructive words outside the image of f, n <= " +
                     std::to_string(max_n));
    const std::uint64_t ternary_max = std::min<std::uint64_t>(max_n, 10);
    for (std::uint64_t total = 3; total <= ternary_max; ++total) {
        for_each_content(3, total, 1, [&](const Content& c) {
            const std::string name = "content " + to_string(c);
            rb.instance(name, [&] {
                const std::optional<Word> w = nonsurjectivity_witness(c);
                rb.check(w.has_value(), name, "witness exists for k = 3", "none");
                if (!w)
                    return;
                const std::set<Word> image = image_of_f(c);
                rb.check(!image.contains(*w), name, "witness outside image(f)",
                         "witness " + to_string(*w) + " is in the image");
            });
        });
    }
    for (std::uint64_t n = 11; n <= max_n; ++n) {
        for (std::uint64_t d = 1; d < n; ++d) {
            const std::optional<Word> w = strict_witness(n, d);
            if (!w)
                continue;
            rb.instance(pair_name(n, d), [&] {
                const std::set<Word> image = image_of_f(Content::binary(n - d, d));
                rb.check(!image.contains(*w), pair_name(n, d), "witness outside image(f)",
                         "witness " + to_string(*w) + " is in the image");
            });
        }
    }
    return rb.finish();
}

VerificationReport verify_oracle(std::uint64_t max_n, std::size_t max_alphabet,
                                 std::uint64_t binary_max_n) {
    ReportBuilder rb("oracle: counting vs generation vs brute force, n <= " +
                     std::to_string(max_n) + " (binary <= " + std::to_string(binary_max_n) +
                     "), k <= " + std::to_string(max_alphabet));
    for (std::size_t k = 2; k <= max_alphabet; ++k) {
        const std::uint64_t limit = k == 2 ? std::max(max_n, binary_max_n) : max_n;
        for (std::uint64_t total = 1; total <= limit; ++total) {
            for_each_content(k, total, 0, [&](const Content& c) {
                const std::string name = "content " + to_string(c);
                rb.instance(name, [&] {
                    const std::vector<Word> words = oracle::brute_words(c, limit);
                    rb.check(BigCount(words.size()) == multinomial(c), name,
                             "|words| = multinomial", std::to_string(words.size()));

                    std::vector<Word> necklaces, lyndon, prenecklaces;
                    for (const Word& w : words) {
                        if (oracle::is_necklace(w))
                            necklaces.push_back(w);
                        if (oracle::is_lyndon(w))
                            lyndon.push_back(w);
                        if (oracle::is_prenecklace(w))
                            prenecklaces.push_back(w);
                    }

                    rb.check(generate_all(c, GenKind::necklace) == necklaces, name,
                             "generated necklaces = oracle necklaces", "mismatch");
                    rb.check(generate_all(c, GenKind::lyndon) == lyndon, name,
                             "generated Lyndon words = oracle Lyndon words", "mismatch");
                    rb.check(generate_all(c, GenKind::prenecklace) == prenecklaces, name,
                             "generated prenecklaces = oracle prenecklaces", "mismatch");

                    rb.check(count_necklaces(c) == BigCount(necklaces.size()), name,
                             "N formula = |oracle necklaces|",
                             count_necklaces(c).str() + " vs " +
                                 std::to_string(necklaces.size()));
                    rb.check(count_lyndon(c) == BigCount(lyndon.size()), name,
                             "L formula = |oracle Lyndon words|",
                             count_lyndon(c).str() + " vs " + std::to_string(lyndon.size()));
                });
            });
        }
    }
    return rb.finish();
}

}  // namespace necklace
