// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "bench_common.hpp"
#include "graphcalc/spectral.hpp"

using namespace graphcalc;

static void BM_EigensystemDirichletGrid(benchmark::State& state) {
    const auto side = static_cast<std::size_t>(state.range(0));
    const Graph g = bench::grid(side, side);
    const auto interior = bench::grid_interior(side, side);
    const OperatorSpec spec{build_window(g, interior), std::nullopt, BoundaryCondition::dirichlet, {}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(eigensystem(spec).values().front());
    }
    state.SetComplexityN(static_cast<benchmark::IterationCount>(interior.size()));
}
BENCHMARK(BM_EigensystemDirichletGrid)->Arg(6)->Arg(10)->Arg(14)->Arg(18)->Complexity(benchmark::oNCubed);

static void BM_HeatKernelMatrix(benchmark::State& state) {
    const Graph g = bench::grid(12, 12);
    const auto es = eigensystem(OperatorSpec{build_window(g, bench::grid_interior(12, 12)), std::nullopt,
                                             BoundaryCondition::dirichlet, {}});
    const HeatKernel kernel(es);
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernel.matrix(0.5)(0, 0));
    }
}
BENCHMARK(BM_HeatKernelMatrix);
