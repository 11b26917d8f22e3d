#include <benchmark/benchmark.h>

#include "generators.hpp"
#include "treepack/hpack_dp.hpp"

using namespace treepack;

static const char* kPatterns[] = {"K3", "P3", "paw", "C4", "K4"};

// Args: pattern index, tree-width bound k.
static void BM_HPacking(benchmark::State& state) {
    tools::Rng rng(4);
    Graph h = tools::named_pattern(kPatterns[state.range(0)]);
    auto kt = tools::partial_ktree(30, static_cast<int>(state.range(1)), 0.7, rng);
    auto ntd = nicify(kt.td);
    for (auto _ : state) benchmark::DoNotOptimize(solve_h_packing(kt.graph, ntd, h).value);
    state.SetLabel(kPatterns[state.range(0)]);
}
BENCHMARK(BM_HPacking)->ArgsProduct({{0, 1, 2, 3, 4}, {2, 3}})->Unit(benchmark::kMillisecond);

static void BM_HPackingRaw(benchmark::State& state) {
    tools::Rng rng(4);
    Graph h = tools::named_pattern(kPatterns[state.range(0)]);
    auto kt = tools::partial_ktree(30, 3, 0.7, rng);
    auto ntd = nicify(kt.td);
    HPackOptions o;
    o.canonical = false;
    for (auto _ : state) benchmark::DoNotOptimize(solve_h_packing(kt.graph, ntd, h, o).value);
    state.SetLabel(kPatterns[state.range(0)]);
}
BENCHMARK(BM_HPackingRaw)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
