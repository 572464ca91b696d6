#include <benchmark/benchmark.h>

#include <random>

#include "qpseudo/grid.hpp"
#include "qpseudo/named.hpp"
#include "qpseudo/spectral.hpp"

using namespace qps;

static void BM_SmallestSingularValue(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const QMatrix m = random_matrix(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(smallest_singular_value(m));
}
BENCHMARK(BM_SmallestSingularValue)->RangeMultiplier(2)->Range(1, 32);

static void BM_ComplexEigenvalues(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const CMatrix e = complex_embedding(random_matrix(rng, static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(complex_eigenvalues(e));
}
BENCHMARK(BM_ComplexEigenvalues)->RangeMultiplier(2)->Range(1, 32);

static void BM_SSpectrum(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const QMatrix a = random_matrix(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(s_spectrum(a));
}
BENCHMARK(BM_SSpectrum)->RangeMultiplier(2)->Range(2, 16);

// Full default-resolution scan; the second argument is the worker count.
static void BM_GridScan(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const QMatrix a = state.range(0) == 1 ? left_mult_matrix(Quaternion(0.5, 0.1), 1)
                                        : random_matrix(rng, static_cast<std::size_t>(state.range(0)));
  const GridSpec g = auto_box(a, 0.05, 401, 201);
  for (auto _ : state) benchmark::DoNotOptimize(grid_scan(a, g, static_cast<unsigned>(state.range(1))));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(g.nx * g.ny));
}
BENCHMARK(BM_GridScan)->Args({1, 1})->Args({4, 1})->Args({4, 0})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
