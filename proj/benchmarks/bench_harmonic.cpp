// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include <benchmark/benchmark.h>

#include "bench_common.hpp"
#include "graphcalc/harmonic.hpp"

using namespace graphcalc;

static void BM_HarmonicFlow(benchmark::State& state) {
    const auto side = static_cast<std::size_t>(state.range(0));
    const Graph g = bench::grid(side, side);
    const auto w = build_window(g, bench::grid_interior(side, side));
    SphereMap u(g);
    for (Vertex v : w.closure()) {
        const double a = static_cast<double>(v % side) / static_cast<double>(side);
        const double b = static_cast<double>(v / side) / static_cast<double>(side);
        u.set(v, SpherePoint(std::cos(a), std::sin(a), 1.0 + b));
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(harmonic_heat_flow(u, w, 0.5, 100000, 1e-10).steps);
    }
}
BENCHMARK(BM_HarmonicFlow)->Arg(5)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_MapEnergy(benchmark::State& state) {
    const Graph g = bench::grid(20, 20);
    const auto w = build_window(g, bench::grid_interior(20, 20));
    SphereMap u(g);
    for (Vertex v : w.closure()) u.set(v, SpherePoint(std::cos(v * 0.1), std::sin(v * 0.1), 0.5));
    for (auto _ : state) {
        benchmark::DoNotOptimize(map_energy(u, w));
    }
}
BENCHMARK(BM_MapEnergy);
