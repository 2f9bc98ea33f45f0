// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "bench_common.hpp"
#include "graphcalc/constants.hpp"

using namespace graphcalc;

static void BM_CheegerH(benchmark::State& state) {
    const auto cols = static_cast<std::size_t>(state.range(0));
    const Graph g = bench::grid(3, cols);
    const auto threads = static_cast<unsigned>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cheeger_h(g, threads).value);
    }
}
BENCHMARK(BM_CheegerH)
    ->Args({3, 1})
    ->Args({4, 1})
    ->Args({5, 1})
    ->Args({6, 1})
    ->Args({6, 4})
    ->UseRealTime()
    ->Unit(benchmark::kMillisecond);

static void BM_CheegerG(benchmark::State& state) {
    const Graph g = bench::grid(3, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cheeger_g(g).value);
    }
}
BENCHMARK(BM_CheegerG)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
