#include <benchmark/benchmark.h>

#include "topo/cohomology.hpp"
#include "topo/complex.hpp"
#include "topo/corpus.hpp"
#include "topo/homology.hpp"

namespace {

void BM_HomologyZ(benchmark::State& state, const char* name) {
  const auto K = topo::builtin(name);
  for (auto _ : state) benchmark::DoNotOptimize(topo::homology(K, topo::Coefficients::integers()));
}
BENCHMARK_CAPTURE(BM_HomologyZ, torus, "torus");
BENCHMARK_CAPTURE(BM_HomologyZ, klein, "klein");
BENCHMARK_CAPTURE(BM_HomologyZ, torus3, "torus:3");

void BM_HomologySubdivided(benchmark::State& state) {
  const auto K = topo::iterated_subdivision(topo::builtin("sphere:2"), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(topo::betti_numbers(K));
}
BENCHMARK(BM_HomologySubdivided)->DenseRange(0, 2);

void BM_RingTorus(benchmark::State& state) {
  const auto K = topo::builtin("torus:2");
  for (auto _ : state) benchmark::DoNotOptimize(topo::ring_structure(K, topo::Coefficients::rationals()));
}
BENCHMARK(BM_RingTorus);

}  // namespace
