// Command-line surface for fixed-content necklace counting, enumeration,
// stability classification, the zero-deleting injection on unstable
// necklaces, and exhaustive verification sweeps.
//
// Exit codes: 0 success / verification pass, 1 verification failure,
// 2 usage or input error.

#include <charconv>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "necklace/counting.hpp"
#include "necklace/generation.hpp"
#include "necklace/mapping.hpp"
#include "necklace/verify.hpp"
#include "necklace/word.hpp"

namespace {

using nlohmann::json;
using namespace necklace;

std::vector<std::uint64_t> parse_counts(const std::string& text) {
    std::vector<std::uint64_t> counts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t next = std::min(text.find(',', pos), text.size());
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + next, value);
        if (ec != std::errc() || ptr != text.data() + next)
            throw std::invalid_argument("bad content spec: " + text);
        counts.push_back(value);
        if (next == text.size())
            break;
        pos = next + 1;
    }
    return counts;
}

struct ContentSpec {
    std::string content;             // --content a,b,c
    std::optional<std::uint64_t> n;  // -n
    std::optional<std::uint64_t> d;  // -d

    Content resolve() const {
        if (!content.empty()) {
            if (n || d)
                throw std::invalid_argument("give either --content or -n/-d, not both");
            return Content(parse_counts(content));
        }
        if (n && d)
            return Content::binary_density(*n, *d);
        throw std::invalid_argument("content required: --content a,b,... or -n N -d D");
    }

    void attach(CLI::App* cmd) {
        cmd->add_option("--content", content, "content vector, e.g. 3,2,1 (k from arity)");
        cmd->add_option("-n", n, "binary shorthand: word length");
        cmd->add_option("-d", d, "binary shorthand: density (number of 1s)");
    }
};

GenKind parse_kind(const std::string& kind) {
    if (kind == "prenecklace")
        return GenKind::prenecklace;
    if (kind == "necklace")
        return GenKind::necklace;
    if (kind == "lyndon")
        return GenKind::lyndon;
    throw std::invalid_argument("unknown kind: " + kind);
}

int run_count(const ContentSpec& spec, bool as_json) {
    const Content c = spec.resolve();
    const BigCount necklaces = count_necklaces(c);
    const BigCount lyndon = count_lyndon(c);

    std::optional<BigCount> rhs;
    std::vector<BigCount> terms;
    bool all_positive = true;
    for (std::uint64_t v : c.counts())
        all_positive = all_positive && v > 0;
    if (all_positive) {
        for (std::size_t i = 0; i < c.alphabet_size(); ++i)
            terms.push_back(count_lyndon(c.decremented(i)));
        rhs = BigCount(0);
        for (const BigCount& t : terms)
            *rhs += t;
    }

    if (as_json) {
        json out{{"content", c.counts()},
                 {"n", c.total()},
                 {"k", c.alphabet_size()},
                 {"necklaces", necklaces.str()},
                 {"lyndon", lyndon.str()}};
        if (rhs) {
            json term_list = json::array();
            for (const BigCount& t : terms)
                term_list.push_back(t.str());
            out["bound_rhs"] = rhs->str();
            out["bound_rhs_terms"] = term_list;
            out["gap"] = BigCount(*rhs - necklaces).str();
        }
        std::cout << out.dump() << '\n';
        return 0;
    }

    std::cout << "content: " << to_string(c) << " (n=" << c.total()
              << ", k=" << c.alphabet_size() << ")\n";
    std::cout << "necklaces: " << necklaces.str() << '\n';
    std::cout << "lyndon:    " << lyndon.str() << '\n';
    if (rhs) {
        std::cout << "bound rhs: " << rhs->str() << " (= ";
        for (std::size_t i = 0; i < terms.size(); ++i)
            std::cout << (i ? " + " : "") << terms[i].str();
        std::cout << ")\n";
        std::cout << "gap:       " << BigCount(*rhs - necklaces).str() << '\n';
    } else {
        std::cout << "bound rhs: n/a (requires every symbol count >= 1)\n";
    }
    return 0;
}

int run_enumerate(const ContentSpec& spec, const std::string& kind_name, bool as_json) {
    const Content c = spec.resolve();
    const GenKind kind = parse_kind(kind_name);
    Generator gen(c, kind);
    while (auto w = gen.next()) {
        if (as_json) {
            json record{{"word", to_string(*w)}};
            if (kind == GenKind::necklace)
                record["stable"] = classify(*w) == Stability::stable;
            std::cout << record.dump() << '\n';
        } else {
            std::cout << to_string(*w) << '\n';
        }
    }
    return 0;
}

int run_map(const std::string& text, std::optional<Symbol> alphabet, bool as_json) {
    const Word w = parse_word(text, alphabet);
    const UnstableDecomposition dec = decompose(w);
    const Word image = apply_f(w);
    const char* branch = dec.zero_ends_tail() ? "z=i" : "z<i";
    if (as_json) {
        json out{{"word", to_string(w)},    {"p", dec.period},    {"j", dec.repetitions},
                 {"i", dec.tail_length},    {"z", dec.last_zero}, {"x", dec.trailing_symbol},
                 {"branch", branch},        {"image", to_string(image)}};
        std::cout << out.dump() << '\n';
    } else {
        std::cout << "word: " << to_string(w) << '\n';
        std::cout << "p=" << dec.period << " j=" << dec.repetitions << " i=" << dec.tail_length
                  << " z=" << dec.last_zero << " x=" << dec.trailing_symbol << '\n';
        std::cout << "branch: " << branch << '\n';
        std::cout << "image: " << to_string(image) << '\n';
    }
    return 0;
}

int emit_report(const VerificationReport& report, bool as_json) {
    constexpr std::size_t kMaxPrintedFailures = 50;
    if (as_json) {
        json failures = json::array();
        for (const VerificationFailure& f : report.failures)
            failures.push_back(
                {{"instance", f.instance}, {"expected", f.expected}, {"actual", f.actual}});
        json out{{"suite", report.scope},
                 {"instances_checked", report.instances_checked},
                 {"failures", failures},
                 {"elapsed_seconds", report.elapsed.count()},
                 {"passed", report.passed()}};
        std::cout << out.dump() << '\n';
    } else {
        std::cout << "suite: " << report.scope << '\n';
        std::cout << "instances checked: " << report.instances_checked << '\n';
        std::cout << "failures: " << report.failures.size() << '\n';
        std::size_t printed = 0;
        for (const VerificationFailure& f : report.failures) {
            if (printed++ == kMaxPrintedFailures) {
                std::cout << "  ... and " << report.failures.size() - kMaxPrintedFailures
                          << " more\n";
                break;
            }
            std::cout << "  FAIL " << f.instance << ": expected " << f.expected << ", got "
                      << f.actual << '\n';
        }
        std::cout << "elapsed: " << report.elapsed.count() << "s\n";
        std::cout << (report.passed() ? "PASS" : "FAIL") << '\n';
    }
    return report.passed() ? 0 : 1;
}

int run_verify(const std::string& suite, std::optional<std::uint64_t> max_n, std::size_t k,
               std::size_t max_k, std::optional<std::uint64_t> binary_max_n, bool as_json) {
    VerificationReport report;
    if (suite == "bound") {
        report = verify_bound(max_n.value_or(64));
    } else if (suite == "injectivity") {
        report = verify_injectivity(max_n.value_or(10), k);
    } else if (suite == "equality") {
        report = verify_equality(max_n.value_or(30));
    } else if (suite == "witnesses") {
        report = verify_witnesses(max_n.value_or(12));
    } else if (suite == "oracle") {
        const std::uint64_t limit = max_n.value_or(9);
        report = verify_oracle(limit, max_k, binary_max_n.value_or(std::max<std::uint64_t>(limit, 12)));
    } else {
        throw std::invalid_argument("unknown suite: " + suite +
                                    " (expected bound|injectivity|equality|witnesses|oracle)");
    }
    return emit_report(report, as_json);
}

int run_table(std::uint64_t max_n, bool as_json) {
    if (!as_json)
        std::cout << "n\td\tN\tL(n-1,d)\tL(n-1,d-1)\tgap\tequality\n";
    for (std::uint64_t n = 2; n <= max_n; ++n) {
        for (std::uint64_t d = 1; d < n; ++d) {
            const BigCount necklaces = binary_necklace_count(n, d);
            const BigCount left = binary_lyndon_count(n - 1, d);
            const BigCount right = binary_lyndon_count(n - 1, d - 1);
            const BigCount gap = left + right - necklaces;
            const bool equality = equality_status(n, d).equality;
            if (as_json) {
                json row{{"n", n},
                         {"d", d},
                         {"necklaces", necklaces.str()},
                         {"lyndon_d", left.str()},
                         {"lyndon_d_minus_1", right.str()},
                         {"gap", gap.str()},
                         {"equality", equality}};
                std::cout << row.dump() << '\n';
            } else {
                std::cout << n << '\t' << d << '\t' << necklaces.str() << '\t' << left.str()
                          << '\t' << right.str() << '\t' << gap.str() << '\t'
                          << (equality ? "true" : "false") << '\n';
            }
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fixed-content necklace and Lyndon word toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    bool as_json = false;
    app.add_flag("--json", as_json, "line-delimited JSON records instead of text");

    ContentSpec count_spec;
    CLI::App* count_cmd = app.add_subcommand(
        "count", "exact necklace/Lyndon counts and the Pascal-like bound for one content");
    count_spec.attach(count_cmd);

    ContentSpec enum_spec;
    std::string kind = "necklace";
    CLI::App* enum_cmd =
        app.add_subcommand("enumerate", "stream fixed-content words in lexicographic order");
    enum_spec.attach(enum_cmd);
    enum_cmd->add_option("--kind", kind, "prenecklace | necklace | lyndon")
        ->default_val("necklace");

    std::string map_word;
    std::optional<Symbol> map_alphabet;
    CLI::App* map_cmd = app.add_subcommand(
        "map", "decompose an unstable necklace and apply the zero-deleting injection");
    map_cmd->add_option("word", map_word, "word text, e.g. 0101")->required();
    map_cmd->add_option("--alphabet-size,-k", map_alphabet,
                        "alphabet size (default: max symbol + 1)");

    std::string suite;
    std::optional<std::uint64_t> verify_max_n;
    std::size_t verify_k = 2;
    std::size_t verify_max_k = 3;
    std::optional<std::uint64_t> verify_binary_max_n;
    CLI::App* verify_cmd = app.add_subcommand("verify", "exhaustive verification sweeps");
    verify_cmd->add_option("suite", suite, "bound | injectivity | equality | witnesses | oracle")
        ->required();
    verify_cmd->add_option("--max-n", verify_max_n, "largest total length to sweep");
    verify_cmd->add_option("--k", verify_k, "alphabet size (injectivity)")->default_val(2);
    verify_cmd->add_option("--max-k", verify_max_k, "largest alphabet size (oracle)")
        ->default_val(3);
    verify_cmd->add_option("--binary-max-n", verify_binary_max_n,
                           "extended binary length bound (oracle)");

    std::uint64_t table_max_n = 16;
    CLI::App* table_cmd =
        app.add_subcommand("table", "N / rhs / gap / equality rows for all 0 < d < n");
    table_cmd->add_option("--max-n", table_max_n, "largest n")->default_val(16);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*count_cmd)
            return run_count(count_spec, as_json);
        if (*enum_cmd)
            return run_enumerate(enum_spec, kind, as_json);
        if (*map_cmd)
            return run_map(map_word, map_alphabet, as_json);
        if (*verify_cmd)
            return run_verify(suite, verify_max_n, verify_k, verify_max_k, verify_binary_max_n,
                              as_json);
        if (*table_cmd)
            return run_table(table_max_n, as_json);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal invariant violation: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
