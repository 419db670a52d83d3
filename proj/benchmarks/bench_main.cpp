#include <benchmark/benchmark.h>

#include "sparsity/catalog.hpp"
#include "sparsity/counting.hpp"
#include "sparsity/decomposition.hpp"
#include "sparsity/density.hpp"
#include "sparsity/treedepth.hpp"

using namespace sparsity;

static void BM_TreedepthExact(benchmark::State& state) {
    auto g = gnm_graph(static_cast<int>(state.range(0)), 2 * static_cast<int>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(treedepth_exact(g).treedepth);
}
BENCHMARK(BM_TreedepthExact)->DenseRange(8, 16, 4);

static void BM_Nabla0(benchmark::State& state) {
    auto g = planar_triangulation(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(nabla0(g).density);
}
BENCHMARK(BM_Nabla0)->RangeMultiplier(4)->Range(16, 1024);

static void BM_LtdColoring(benchmark::State& state) {
    auto g = planar_triangulation(static_cast<int>(state.range(0)), 5);
    const int p = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(ltd_coloring(g, p).coloring.palette);
}
BENCHMARK(BM_LtdColoring)->ArgsProduct({{50, 100, 200}, {2, 3}})->Unit(benchmark::kMillisecond);

static void BM_CountLtd(benchmark::State& state) {
    auto host = grid_graph(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
    auto pattern = cycle_graph(4);
    for (auto _ : state) benchmark::DoNotOptimize(count_ltd(pattern, host, CountMode::subgraph).count);
}
BENCHMARK(BM_CountLtd)->DenseRange(4, 12, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
