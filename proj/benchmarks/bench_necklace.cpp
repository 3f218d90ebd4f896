#include <benchmark/benchmark.h>

#include <random>

#include "necklace/counting.hpp"
#include "necklace/generation.hpp"
#include "necklace/word.hpp"

using namespace necklace;

namespace {

void BM_EnumerateBalancedNecklaces(benchmark::State& state) {
    const std::uint64_t half = static_cast<std::uint64_t>(state.range(0)) / 2;
    std::uint64_t emitted = 0;
    for (auto _ : state) {
        Generator gen(Content({half, half}), GenKind::necklace);
        while (auto w = gen.next()) {
            benchmark::DoNotOptimize(*w);
            ++emitted;
        }
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(emitted));
}
BENCHMARK(BM_EnumerateBalancedNecklaces)->Arg(16)->Arg(20)->Arg(24);

void BM_EnumerateTernaryLyndon(benchmark::State& state) {
    const std::uint64_t third = static_cast<std::uint64_t>(state.range(0)) / 3;
    std::uint64_t emitted = 0;
    for (auto _ : state) {
        Generator gen(Content({third, third, third}), GenKind::lyndon);
        while (auto w = gen.next()) {
            benchmark::DoNotOptimize(*w);
            ++emitted;
        }
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(emitted));
}
BENCHMARK(BM_EnumerateTernaryLyndon)->Arg(12)->Arg(15);

void BM_CountBalancedNecklaces(benchmark::State& state) {
    const std::uint64_t half = static_cast<std::uint64_t>(state.range(0)) / 2;
    for (auto _ : state) {
        BigCount n = count_necklaces(Content({half, half}));
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(BM_CountBalancedNecklaces)->Arg(64)->Arg(256)->Arg(1024);

Word random_word(std::size_t n, Symbol k, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::vector<Symbol> symbols(n);
    for (Symbol& s : symbols)
        s = rng() % k;
    return Word(std::move(symbols), k);
}

void BM_IsNecklace(benchmark::State& state) {
    // Sorted words are necklaces, so the scan cannot exit early.
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    std::vector<Symbol> symbols(n, 0);
    std::fill(symbols.begin() + n / 2, symbols.end(), 1);
    const Word w(std::move(symbols), 2);
    for (auto _ : state) {
        bool b = is_necklace(w);
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(BM_IsNecklace)->Arg(1 << 10)->Arg(1 << 16);

void BM_MinRotation(benchmark::State& state) {
    const Word w = random_word(static_cast<std::size_t>(state.range(0)), 4, 11);
    for (auto _ : state) {
        std::size_t r = min_rotation(w);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_MinRotation)->Arg(1 << 10)->Arg(1 << 16);

}  // namespace

BENCHMARK_MAIN();
