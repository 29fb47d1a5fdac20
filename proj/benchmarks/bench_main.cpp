#include "degseq/adversarial.hpp"
#include "degseq/constructive.hpp"
#include "degseq/counting.hpp"
#include "degseq/regions.hpp"
#include "degseq/switch_chain.hpp"
#include "degseq/trails.hpp"

#include <benchmark/benchmark.h>

#include <vector>

using namespace degseq;

namespace {

DegreeSequence random_sequence(int n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<int> degs;
    for (int t = 0; t < n; ++t)
        degs.push_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
    if (DegreeSequence(degs).sum() % 2 != 0) degs[0] ^= 1;
    return DegreeSequence(degs);
}

void BM_is_graphic(benchmark::State& state) {
    DegreeSequence d = random_sequence(static_cast<int>(state.range(0)), 99);
    for (auto _ : state) benchmark::DoNotOptimize(is_graphic(d));
}
BENCHMARK(BM_is_graphic)->Arg(100)->Arg(1000)->Arg(10000);

void BM_count_half_graph(benchmark::State& state) {
    auto [d, g] = half_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        clear_count_memo();
        benchmark::DoNotOptimize(count_realizations(d));
    }
}
BENCHMARK(BM_count_half_graph)->Arg(8)->Arg(10)->Arg(14);

void BM_boundary_quotient(benchmark::State& state) {
    auto [d, g] = half_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        clear_count_memo();
        benchmark::DoNotOptimize(boundary_quotient(d, PairConvention::i_le_j));
    }
}
BENCHMARK(BM_boundary_quotient)->Arg(6)->Arg(8)->Arg(10);

void BM_witness_trail(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    SplitMix64 rng(7);
    LabeledGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.below(4) == 0) g.add_edge(i, j);
    for (auto _ : state) benchmark::DoNotOptimize(find_witness_trail(g, 0, 1, 11));
}
BENCHMARK(BM_witness_trail)->Arg(30)->Arg(60)->Arg(120);

void BM_switch_steps(benchmark::State& state) {
    DegreeSequence d(std::vector<int>(static_cast<size_t>(state.range(0)), 4));
    ChainState chain = make_chain_state(d, 1);
    for (auto _ : state) switch_step_inplace(chain);
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_switch_steps)->Arg(64)->Arg(256);

void BM_enumerate_region(benchmark::State& state) {
    SimpleRegion r = SimpleRegion::create(12, 36, 8, 1);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_region(r));
}
BENCHMARK(BM_enumerate_region);

void BM_unstable_window(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(unstable_window(2000, 1500, 2, 8, Rat(9, 10)));
}
BENCHMARK(BM_unstable_window);

} // namespace

BENCHMARK_MAIN();
