#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "necklace/counting.hpp"
#include "necklace/generation.hpp"
#include "necklace/oracle.hpp"

using namespace necklace;
using necklace::testing::for_each_content;

namespace {

std::vector<std::string> as_strings(const std::vector<Word>& words) {
    std::vector<std::string> out;
    for (const Word& w : words)
        out.push_back(to_string(w));
    return out;
}

}  // namespace

TEST_CASE("generate spec values") {
    CHECK(as_strings(generate_all(Content({3, 3}), GenKind::necklace)) ==
          std::vector<std::string>{"000111", "001011", "001101", "010101"});
    CHECK(as_strings(generate_all(Content({2, 2}), GenKind::lyndon)) ==
          std::vector<std::string>{"0011"});
    CHECK(as_strings(generate_all(Content({1, 1, 1}), GenKind::necklace)) ==
          std::vector<std::string>{"012", "021"});
    CHECK(as_strings(generate_all(Content({1, 0}), GenKind::lyndon)) ==
          std::vector<std::string>{"0"});
    CHECK_THROWS_AS(Generator(Content({0, 0}), GenKind::necklace), std::invalid_argument);
}

TEST_CASE("streams are lazy and strictly increasing") {
    Generator gen(Content({4, 4}), GenKind::necklace);
    std::optional<Word> previous;
    std::uint64_t emitted = 0;
    while (auto w = gen.next()) {
        if (previous)
            CHECK(lex_compare(*previous, *w) == std::strong_ordering::less);
        CHECK(content_of(*w) == Content({4, 4}));
        previous = std::move(w);
        ++emitted;
    }
    CHECK(BigCount(emitted) == count_necklaces(Content({4, 4})));
    CHECK_FALSE(gen.next().has_value());
}

TEST_CASE("streams match oracle sets for every content, n <= 9, k <= 3") {
    for (std::size_t k = 2; k <= 3; ++k) {
        for (std::uint64_t total = 1; total <= 9; ++total) {
            for_each_content(k, total, 0, [&](const Content& c) {
                CAPTURE(to_string(c));
                CHECK(generate_all(c, GenKind::necklace) == oracle::brute_necklaces(c));
                CHECK(generate_all(c, GenKind::lyndon) == oracle::brute_lyndon(c));
                CHECK(generate_all(c, GenKind::prenecklace) == oracle::brute_prenecklaces(c));
            });
        }
    }
}

TEST_CASE("classify spec values") {
    CHECK(classify(parse_word("001011")) == Stability::stable);
    CHECK(classify(parse_word("0101")) == Stability::unstable);
    CHECK(classify(parse_word("001001")) == Stability::unstable);
    CHECK_THROWS_AS(classify(parse_word("0110")), std::invalid_argument);
    CHECK_THROWS_AS(classify(parse_word("0")), std::invalid_argument);
}

TEST_CASE("partition_necklaces") {
    const NecklacePartition p22 = partition_necklaces(Content({2, 2}));
    CHECK(as_strings(p22.stable) == std::vector<std::string>{"0011"});
    CHECK(as_strings(p22.unstable) == std::vector<std::string>{"0101"});

    const NecklacePartition p11 = partition_necklaces(Content({1, 1}));
    CHECK(as_strings(p11.stable) == std::vector<std::string>{"01"});
    CHECK(p11.unstable.empty());

    // 001101 is unstable: its prefix 00110 has the smaller rotation 00011.
    const NecklacePartition p33 = partition_necklaces(Content({3, 3}));
    CHECK(as_strings(p33.stable) == std::vector<std::string>{"000111", "001011"});
    CHECK(as_strings(p33.unstable) == std::vector<std::string>{"001101", "010101"});

    CHECK_THROWS_AS(partition_necklaces(Content({2, 0})), std::invalid_argument);
    CHECK_THROWS_AS(partition_necklaces(Content({1, 0, 0})), std::invalid_argument);
}

TEST_CASE("partition covers the necklace stream and |S| matches its Lyndon sum") {
    for (std::size_t k = 2; k <= 3; ++k) {
        for (std::uint64_t total = k; total <= 10; ++total) {
            for_each_content(k, total, 1, [&](const Content& c) {
                CAPTURE(to_string(c));
                const NecklacePartition parts = partition_necklaces(c);
                std::vector<Word> merged;
                std::merge(parts.stable.begin(), parts.stable.end(), parts.unstable.begin(),
                           parts.unstable.end(), std::back_inserter(merged));
                CHECK(merged == generate_all(c, GenKind::necklace));

                BigCount stable_sum = 0;
                for (std::size_t s = 1; s < k; ++s)
                    stable_sum += count_lyndon(c.decremented(s));
                CHECK(BigCount(parts.stable.size()) == stable_sum);
            });
        }
    }
}

TEST_CASE("stable necklaces correspond to Lyndon words with one symbol appended") {
    // Dropping the last symbol of a stable necklace gives a Lyndon word;
    // appending b >= 1 to a Lyndon word of the b-decremented content gives a
    // stable necklace. The two constructions invert each other.
    for (std::size_t k = 2; k <= 3; ++k) {
        for (std::uint64_t total = k; total <= 10; ++total) {
            for_each_content(k, total, 1, [&](const Content& c) {
                CAPTURE(to_string(c));
                const NecklacePartition parts = partition_necklaces(c);
                std::set<Word> stable(parts.stable.begin(), parts.stable.end());

                std::set<Word> rebuilt;
                for (Symbol b = 1; b < k; ++b) {
                    for (const Word& u : generate_all(c.decremented(b), GenKind::lyndon)) {
                        std::vector<Symbol> symbols(u.symbols().begin(), u.symbols().end());
                        symbols.push_back(b);
                        rebuilt.emplace(std::move(symbols), static_cast<Symbol>(k));
                    }
                }
                CHECK(rebuilt == stable);

                for (const Word& w : parts.stable)
                    CHECK(is_lyndon(w.prefix(w.size() - 1)));
            });
        }
    }
}
