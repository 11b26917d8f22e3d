#include <benchmark/benchmark.h>

#include <random>

#include "treepack/clique_dp.hpp"

using namespace treepack;

static DenseTable random_table(int width, int c, std::mt19937_64& rng) {
    DenseTable t(width, c);
    for (auto& v : t.values) v = rng() % 4 == 0 ? DenseTable::kAbsent : static_cast<long long>(rng() % 50);
    return t;
}

// Args: bag size, c.
static void BM_JoinNaive(benchmark::State& state) {
    std::mt19937_64 rng(3);
    auto a = random_table(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), rng);
    auto b = random_table(a.width, a.c, rng);
    for (auto _ : state) benchmark::DoNotOptimize(join_naive(a, b).values.data());
    state.counters["entries"] = static_cast<double>(a.size());
}
BENCHMARK(BM_JoinNaive)->ArgsProduct({{2, 4, 6, 8}, {1, 2, 3}});

static void BM_JoinConvolution(benchmark::State& state) {
    std::mt19937_64 rng(3);
    auto a = random_table(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), rng);
    auto b = random_table(a.width, a.c, rng);
    for (auto _ : state) benchmark::DoNotOptimize(join_convolution(a, b).values.data());
    state.counters["entries"] = static_cast<double>(a.size());
}
BENCHMARK(BM_JoinConvolution)->ArgsProduct({{2, 4, 6, 8}, {1, 2, 3}});

BENCHMARK_MAIN();
