#include <benchmark/benchmark.h>

#include "splinefan/arrangements.hpp"
#include "splinefan/chain_complex.hpp"
#include "splinefan/constructions.hpp"
#include "splinefan/splines.hpp"
#include "splinefan/supports.hpp"

using namespace splinefan;

static void BM_BilleraRoseRank(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  FaceLattice lattice(p2_fan(n).fan);
  for (auto _ : state) {
    RatMatrix m = billera_rose_block(lattice, k);
    benchmark::DoNotOptimize(rank(m));
  }
}
BENCHMARK(BM_BilleraRoseRank)->Args({3, 4})->Args({3, 8})->Args({4, 4})->Args({4, 8});

static void BM_SplineDimension(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  FaceLattice lattice(p2_fan(4).fan);
  for (auto _ : state) benchmark::DoNotOptimize(spline_dimension(lattice, k));
}
BENCHMARK(BM_SplineDimension)->Arg(2)->Arg(6)->Arg(10);

static void BM_HomologyTable(benchmark::State& state) {
  const int max_degree = static_cast<int>(state.range(0));
  FaceLattice lattice(p2_fan(4).fan);
  for (auto _ : state) {
    ChainComplex complex(lattice);
    benchmark::DoNotOptimize(homology_dimensions(complex, max_degree));
  }
}
BENCHMARK(BM_HomologyTable)->Arg(4)->Arg(8);

static void BM_DerivationTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Arrangement a = braid_arrangement(n, /*essential=*/true);
  for (auto _ : state) benchmark::DoNotOptimize(derivation_table(a, 2 * n + 2));
}
BENCHMARK(BM_DerivationTable)->Arg(3)->Arg(4);

static void BM_Alpha(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  FaceLattice lattice(p2_fan(n).fan);
  for (auto _ : state) benchmark::DoNotOptimize(alpha(lattice, n - 2));
}
BENCHMARK(BM_Alpha)->Arg(3)->Arg(4);

BENCHMARK_MAIN();
