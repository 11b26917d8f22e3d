#include <benchmark/benchmark.h>

#include "generators.hpp"
#include "treepack/clique_dp.hpp"

using namespace treepack;

// Partial k-trees of fixed size; width grows with the range argument.
static void BM_CliquePacking(benchmark::State& state) {
    tools::Rng rng(1);
    int k = static_cast<int>(state.range(0)), c = static_cast<int>(state.range(1));
    auto kt = tools::partial_ktree(40, k, 0.8, rng);
    auto ntd = nicify(kt.td);
    for (auto _ : state) benchmark::DoNotOptimize(solve_clique_packing(kt.graph, ntd, c, 3, Variant::Arb).value);
    state.counters["width"] = ntd.width();
}
BENCHMARK(BM_CliquePacking)->ArgsProduct({{2, 3, 4, 5}, {1, 2}})->Unit(benchmark::kMillisecond);

static void BM_CliquePackingDense(benchmark::State& state) {
    tools::Rng rng(2);
    int k = static_cast<int>(state.range(0));
    auto kt = tools::partial_ktree(40, k, 0.8, rng);
    auto ntd = nicify(kt.td);
    CliqueDPOptions o;
    o.dense = true;
    for (auto _ : state) benchmark::DoNotOptimize(solve_clique_packing(kt.graph, ntd, 1, 3, Variant::Arb, o).value);
    state.counters["width"] = ntd.width();
}
BENCHMARK(BM_CliquePackingDense)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
