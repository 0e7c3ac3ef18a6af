#include <benchmark/benchmark.h>

#include <random>

#include "topo/chain.hpp"
#include "topo/corpus.hpp"
#include "topo/exactlinalg.hpp"

namespace {

topo::IntMatrix random_matrix(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> entry(-4, 4);
  topo::IntMatrix M(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) M.set(r, c, entry(rng));
  return M;
}

void BM_SmithRandom(benchmark::State& state) {
  const auto M = random_matrix(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(topo::smith_normal_form(M));
}
BENCHMARK(BM_SmithRandom)->Arg(8)->Arg(16)->Arg(32);

void BM_SmithBoundary(benchmark::State& state) {
  const auto K = topo::builtin("torus:3");
  const auto C = topo::ChainComplexRep::build(K);
  const auto M = C.boundary(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(topo::smith_normal_form(M));
}
BENCHMARK(BM_SmithBoundary)->DenseRange(1, 3);

void BM_RankModP(benchmark::State& state) {
  const auto M = random_matrix(64, 11);
  for (auto _ : state) benchmark::DoNotOptimize(topo::rank_over_field(M, 3));
}
BENCHMARK(BM_RankModP);

}  // namespace
