#include <benchmark/benchmark.h>

#include "ihara/families.hpp"
#include "ihara/geodesics.hpp"
#include "ihara/graph.hpp"
#include "ihara/operators.hpp"
#include "ihara/series.hpp"
#include "ihara/spectral.hpp"
#include "ihara/zeta.hpp"

namespace {

using namespace ihara;

void bm_enumeration(benchmark::State& state) {
  const Graph g = make_family({"petersen", {}});
  const Vertex length = static_cast<Vertex>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_closed_geodesics(g, 0, length));
  }
}
BENCHMARK(bm_enumeration)->Arg(6)->Arg(8)->Arg(10)->Arg(12);

void bm_path_operators(benchmark::State& state) {
  const Graph g = make_family({"petersen", {}});
  const long length = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(geodesic_operators(g, length));
  }
}
BENCHMARK(bm_path_operators)->Arg(8)->Arg(12)->Arg(16);

void bm_matrix_series_log(benchmark::State& state) {
  const Graph g = make_family({"petersen", {}});
  const auto w = bass_quadratic(build_operators(g), state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(series_log(w));
  }
}
BENCHMARK(bm_matrix_series_log)->Arg(8)->Arg(12);

void bm_eigendecomposition(benchmark::State& state) {
  const Graph g = make_family({"grid_ball", {2, static_cast<Vertex>(state.range(0))}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(laplacian_eigendecomposition(g));
  }
}
BENCHMARK(bm_eigendecomposition)->Arg(3)->Arg(4)->Arg(5);

void bm_four_factor(benchmark::State& state) {
  const Graph g = make_family({"bowtie", {}});
  const long order = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(zeta_four_factor(g, 0, 0, order));
  }
}
BENCHMARK(bm_four_factor)->Arg(8)->Arg(10)->Arg(12);

void bm_verification_order(benchmark::State& state) {
  const Graph g = make_family({"complete", {4}});
  const long order = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(compare_methods(g, 0, order));
  }
}
BENCHMARK(bm_verification_order)->Arg(6)->Arg(8)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
