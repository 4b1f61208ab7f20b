#include <benchmark/benchmark.h>

#include "senet/entropy.hpp"
#include "senet/generators.hpp"
#include "senet/partition_search.hpp"
#include "senet/spectral.hpp"

using namespace senet;

static void BM_h1(benchmark::State& state) {
  Graph g = grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(h1(g));
}
BENCHMARK(BM_h1)->Arg(32)->Arg(64)->Arg(128);

static void BM_hP_grid_blocks(benchmark::State& state) {
  int side = static_cast<int>(state.range(0));
  Graph g = grid(side);
  Partition p = grid_partition(side, 6);
  for (auto _ : state) benchmark::DoNotOptimize(hP(g, p));
}
BENCHMARK(BM_hP_grid_blocks)->Arg(32)->Arg(64);

static void BM_greedy_h2_grid(benchmark::State& state) {
  Graph g = grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(greedy_h2(g).first);
}
BENCHMARK(BM_greedy_h2_grid)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_exact_h2(benchmark::State& state) {
  Graph g = random_regular(static_cast<int>(state.range(0)), 3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(exact_h2(g).first);
}
BENCHMARK(BM_exact_h2)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_eigenvalues(benchmark::State& state) {
  Graph g = grid(static_cast<int>(state.range(0)));
  SymMatrix L = normalized_laplacian(g);
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues(L).residual);
}
BENCHMARK(BM_eigenvalues)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

static void BM_security_model(benchmark::State& state) {
  SecurityModelParams params;
  params.n = static_cast<int>(state.range(0));
  params.a = 1.5;
  params.d = 4;
  params.rng_seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(security_model(params).first.num_edges());
}
BENCHMARK(BM_security_model)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
