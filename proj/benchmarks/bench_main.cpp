// Benchmarks for the hot paths: Smith normal form, basis enumeration,
// differential assembly, and full slice cohomology.
#include <benchmark/benchmark.h>

#include <random>

#include "chromahom/families.hpp"
#include "chromahom/snf.hpp"
#include "chromahom/state_complex.hpp"

namespace {

using namespace chromahom;

SparseIntMat random_sparse(int rows, int cols, double density,
                           unsigned long long seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution hit(density);
  std::uniform_int_distribution<int> value(-3, 3);
  SparseIntMat m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (hit(rng)) {
        const int x = value(rng);
        if (x != 0) m.set(r, c, x);
      }
  m.finalize();
  return m;
}

// Random matrices with moderate density suffer exact-arithmetic coefficient
// growth far beyond what graph differentials (entries +-1, near-unimodular
// reductions) ever produce, so keep them small and very sparse.
void BM_SmithNormalFormRandom(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SparseIntMat m = random_sparse(n, n, 0.02, 20240911);
  for (auto _ : state) {
    SnfResult r = smith_normal_form(m);
    benchmark::DoNotOptimize(r.rank);
  }
}
BENCHMARK(BM_SmithNormalFormRandom)->Arg(64)->Arg(96);

// The representative workload: reducing an actual differential at the top
// grading of a complete graph.
void BM_SmithNormalFormDifferential(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SimpleGraph g = complete_graph_k(n);
  const SparseIntMat d = differential(g, 3, 2 * n - 3, 0, Variant::chromatic);
  for (auto _ : state) {
    SnfResult r = smith_normal_form(d);
    benchmark::DoNotOptimize(r.rank);
  }
}
BENCHMARK(BM_SmithNormalFormDifferential)->Arg(5)->Arg(6)->Arg(7);

void BM_BasisEnumeration(benchmark::State& state) {
  const SimpleGraph g = wheel_graph(static_cast<int>(state.range(0)));
  const int j = g.v;  // middle of the m = 3 weight range at i = 1
  for (auto _ : state) {
    auto basis = enumerate_basis(g, 3, 1, j);
    benchmark::DoNotOptimize(basis.size());
  }
}
BENCHMARK(BM_BasisEnumeration)->Arg(6)->Arg(8)->Arg(10);

void BM_Differential(benchmark::State& state) {
  const SimpleGraph g = wheel_graph(static_cast<int>(state.range(0)));
  const int j = g.v;
  for (auto _ : state) {
    SparseIntMat d = differential(g, 3, j, 1, Variant::chromatic);
    benchmark::DoNotOptimize(d.nnz());
  }
}
BENCHMARK(BM_Differential)->Arg(6)->Arg(7)->Arg(8);

void BM_SliceCohomology(benchmark::State& state) {
  const SimpleGraph g = complete_graph_k(static_cast<int>(state.range(0)));
  const int j = 2 * g.v - 3;  // top grading over m = 3
  for (auto _ : state) {
    SliceOutcome out = slice_cohomology(g, 3, 1, j);
    benchmark::DoNotOptimize(out.group.rank);
  }
}
BENCHMARK(BM_SliceCohomology)->Arg(4)->Arg(5)->Arg(6)->Arg(7);

void BM_MidSlice(benchmark::State& state) {
  // A mid-range grading of the squares family: larger, torsion-rich slices.
  const SimpleGraph g = gts_graph(2);
  const int j = static_cast<int>(state.range(0));
  for (auto _ : state) {
    SliceOutcome out = slice_cohomology(g, 3, 1, j, Variant::chromatic,
                                        Convention::cohomology, 10'000'000);
    benchmark::DoNotOptimize(out.group.rank);
  }
}
BENCHMARK(BM_MidSlice)->Arg(7)->Arg(9)->Arg(11);

}  // namespace

BENCHMARK_MAIN();
