#include <benchmark/benchmark.h>

#include "girthforge/construction.hpp"
#include "girthforge/curves.hpp"
#include "girthforge/girth.hpp"
#include "girthforge/independent_set.hpp"
#include "girthforge/monotone.hpp"
#include "girthforge/rng.hpp"

using namespace girthforge;

namespace {

LayeredGraph sample(int k, long long m, uint64_t seed) {
  return sample_layered_graph(ConstructionParams::desk_scale(k, m, 5, 1, seed));
}

Poset bench_height2(int s, int q, uint64_t seed) {
  Rng rng(seed);
  std::vector<std::pair<int, int>> covers;
  for (int i = 1; i <= s; ++i)
    for (int j = 1; j <= q; ++j)
      if (rng.bernoulli(1, 2)) covers.emplace_back(i, s + j);
  return Poset::from_covers(s + q, covers);
}

void BM_Sample(benchmark::State& state) {
  uint64_t seed = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(sample(int(state.range(0)), 32, seed++));
}
BENCHMARK(BM_Sample)->Arg(4)->Arg(8)->Arg(16);

void BM_Girth(benchmark::State& state) {
  LayeredGraph lg = sample(int(state.range(0)), 32, 1);
  for (auto _ : state) benchmark::DoNotOptimize(girth(lg.graph));
}
BENCHMARK(BM_Girth)->Arg(4)->Arg(8)->Arg(16);

void BM_BadPairScan(benchmark::State& state) {
  LayeredGraph lg = sample(int(state.range(0)), 24, 2);
  for (auto _ : state) benchmark::DoNotOptimize(list_bad_pairs(lg.graph));
}
BENCHMARK(BM_BadPairScan)->Arg(4)->Arg(6);

void BM_Repair(benchmark::State& state) {
  LayeredGraph lg = sample(4, 24, 3);
  for (auto _ : state) benchmark::DoNotOptimize(repair(lg, 5));
}
BENCHMARK(BM_Repair);

void BM_IndependentSet(benchmark::State& state) {
  auto [gp, rep] = repair(sample(4, int(state.range(0)), 4), 5);
  for (auto _ : state) benchmark::DoNotOptimize(max_independent_set(gp));
}
BENCHMARK(BM_IndependentSet)->Arg(16)->Arg(24)->Arg(32);

void BM_Realize(benchmark::State& state) {
  Poset p = bench_height2(int(state.range(0)), int(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(realize_height2(p));
}
BENCHMARK(BM_Realize)->Arg(4)->Arg(8)->Arg(12);

void BM_PairwiseIntersections(benchmark::State& state) {
  CurveFamily f =
      realize_height2(bench_height2(int(state.range(0)), int(state.range(0)), 6));
  for (auto _ : state) benchmark::DoNotOptimize(pairwise_intersections(f));
}
BENCHMARK(BM_PairwiseIntersections)->Arg(4)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
