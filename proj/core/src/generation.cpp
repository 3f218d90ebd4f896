#include "necklace/generation.hpp"

#include <algorithm>
#include <stdexcept>

namespace necklace {

Generator::Generator(const Content& content, GenKind kind)
    : kind_(kind),
      k_(static_cast<Symbol>(content.alphabet_size())),
      n_(content.total()),
      remaining_(content.counts()) {
    if (n_ == 0)
        throw std::invalid_argument("generate: content total must be >= 1");
    prefix_.resize(n_);
    stack_.reserve(n_);
    stack_.push_back({0, 1});
}

std::optional<Word> Generator::next() {
    while (!stack_.empty()) {
        Frame& frame = stack_.back();
        const std::size_t pos = stack_.size() - 1;
        const Symbol lo = pos == 0 ? 0 : prefix_[pos - frame.lyn_before];
        Symbol b = std::max(frame.next_candidate, lo);
        while (b < k_ && remaining_[b] == 0)
            ++b;
        if (b >= k_) {
            stack_.pop_back();
            if (!stack_.empty())
                ++remaining_[prefix_[stack_.size() - 1]];
            continue;
        }
        frame.next_candidate = b + 1;
        const std::size_t p = (pos > 0 && b == lo) ? frame.lyn_before : pos + 1;
        prefix_[pos] = b;
        --remaining_[b];
        if (pos + 1 == n_) {
            const bool accept = kind_ == GenKind::prenecklace ||
                                (kind_ == GenKind::necklace ? n_ % p == 0 : p == n_);
            ++remaining_[b];
            if (accept)
                return Word(std::vector<Symbol>(prefix_.begin(), prefix_.end()), k_);
            continue;
        }
        stack_.push_back({0, p});
    }
    return std::nullopt;
}

std::vector<Word> generate_all(const Content& c, GenKind kind) {
    Generator gen(c, kind);
    std::vector<Word> out;
    while (auto w = gen.next())
        out.push_back(std::move(*w));
    return out;
}

Stability classify(const Word& w) {
    if (w.size() < 2)
        throw std::invalid_argument("classify: word must have length >= 2");
    if (!is_necklace(w))
        throw std::invalid_argument("classify: input is not a necklace");
    return is_lyndon(w.prefix(w.size() - 1)) ? Stability::stable : Stability::unstable;
}

NecklacePartition partition_necklaces(const Content& c) {
    for (std::uint64_t v : c.counts())
        if (v == 0)
            throw std::invalid_argument("partition_necklaces: every symbol count must be >= 1");
    if (c.total() < 2)
        throw std::invalid_argument("partition_necklaces: content total must be >= 2");
    NecklacePartition parts;
    Generator gen(c, GenKind::necklace);
    while (auto w = gen.next()) {
        if (classify(*w) == Stability::stable)
            parts.stable.push_back(std::move(*w));
        else
            parts.unstable.push_back(std::move(*w));
    }
    return parts;
}

}  // namespace necklace
