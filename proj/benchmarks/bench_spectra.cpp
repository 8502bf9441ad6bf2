#include <benchmark/benchmark.h>

#include "specgraph/graph_ops.hpp"
#include "specgraph/invariants.hpp"
#include "specgraph/spectral.hpp"

using namespace specgraph;

namespace {

Graph sized_graph(int order) {
    // shadows of the Petersen graph give regular instances of order 10m
    return shadow(petersen(), order / 10);
}

void bm_jacobi_adjacency(benchmark::State& state) {
    const Graph g = sized_graph(static_cast<int>(state.range(0)));
    const DenseSymMatrix m = matrix(g, MatrixKind::Adjacency);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sym_eigenvalues(m));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_jacobi_adjacency)->Arg(20)->Arg(40)->Arg(80)->Arg(160)->Complexity();

void bm_randic_spectrum(benchmark::State& state) {
    const Graph g = sized_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(spectrum(g, MatrixKind::Randic));
    }
}
BENCHMARK(bm_randic_spectrum)->Arg(20)->Arg(40)->Arg(80);

void bm_construct_h1(benchmark::State& state) {
    const Graph g = petersen();
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(h1(g, m, 0, m - 1));
    }
}
BENCHMARK(bm_construct_h1)->Arg(4)->Arg(8)->Arg(16);

void bm_kron(benchmark::State& state) {
    const DenseSymMatrix a = matrix(petersen(), MatrixKind::Adjacency);
    const DenseSymMatrix b = matrix(complete(static_cast<int>(state.range(0))),
                                    MatrixKind::Adjacency);
    for (auto _ : state) {
        benchmark::DoNotOptimize(kron(a, b));
    }
}
BENCHMARK(bm_kron)->Arg(4)->Arg(8)->Arg(16);

void bm_verify_shadow(benchmark::State& state) {
    const Graph g = petersen();
    const std::vector<OperationKind> ops{OperationKind::shadow(static_cast<int>(state.range(0)))};
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_all(g, ops));
    }
}
BENCHMARK(bm_verify_shadow)->Arg(2)->Arg(3)->Arg(4);

} // namespace

BENCHMARK_MAIN();
