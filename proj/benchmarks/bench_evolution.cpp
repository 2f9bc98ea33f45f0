// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include <benchmark/benchmark.h>

#include "bench_common.hpp"
#include "graphcalc/evolution.hpp"

using namespace graphcalc;

static void BM_DmfRun(benchmark::State& state) {
    const Graph g = bench::grid(8, 8);
    const auto w = build_window(g, bench::grid_interior(8, 8));
    VertexFunction phi(g, w.closure());
    for (Vertex x : w.interior()) phi.set(x, 1.0 + std::sin(static_cast<double>(x)));
    const auto N = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(dmf_run(phi, Potential::sine(), 1.0, N, w).a_priori_lhs);
    }
}
BENCHMARK(BM_DmfRun)->Arg(8)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_TransportRK4(benchmark::State& state) {
    const Graph g = bench::grid(10, 10);
    VectorField field = VectorField::zero(g, true);
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
        for (Vertex y : g.neighbors(x)) field.set(x, y, x < y ? 1.0 : -1.0);
    }
    std::vector<double> values(g.vertex_count());
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = std::cos(static_cast<double>(i));
    const auto f0 = VertexFunction::on_all(g, values);
    for (auto _ : state) {
        benchmark::DoNotOptimize(transport_solve(g, [&](double) { return field; }, f0, 1.0, 1e-2).states.size());
    }
}
BENCHMARK(BM_TransportRK4)->Unit(benchmark::kMillisecond);
