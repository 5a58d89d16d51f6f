// Parallel kernels against their serial references.
#include <benchmark/benchmark.h>

#include <random>

#include "fairrep/dm_cover.hpp"
#include "fairrep/subiso.hpp"
#include "fairrep/tadpole.hpp"

using namespace fairrep;

namespace {

Graph random_graph(int n, double p, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  return Graph(n, e);
}

BipartiteGraph random_bipartite(int a, int b, double p, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j)
      if (coin(rng)) e.emplace_back(i, j);
  return BipartiteGraph(a, b, e);
}

const Graph tailed_c4(5, {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(3, 4), Edge(4, 1)});

void BM_copies_parallel(benchmark::State& state) {
  Graph host = random_graph(static_cast<int>(state.range(0)), 0.4, 1);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_copies(tailed_c4, host));
}

void BM_copies_serial(benchmark::State& state) {
  Graph host = random_graph(static_cast<int>(state.range(0)), 0.4, 1);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_copies_serial(tailed_c4, host));
}

void BM_membership_parallel(benchmark::State& state) {
  auto g = random_bipartite(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)), 0.1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(min_cover_membership(g));
}

void BM_membership_serial(benchmark::State& state) {
  auto g = random_bipartite(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)), 0.1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(min_cover_membership_serial(g));
}

void BM_pairs_parallel(benchmark::State& state) {
  Graph host = random_graph(static_cast<int>(state.range(0)), 0.35, 3);
  for (auto _ : state) benchmark::DoNotOptimize(build_pair_family(host, cycle_graph(3)));
}

void BM_pairs_serial(benchmark::State& state) {
  Graph host = random_graph(static_cast<int>(state.range(0)), 0.35, 3);
  for (auto _ : state) benchmark::DoNotOptimize(build_pair_family_serial(host, cycle_graph(3)));
}

}  // namespace

BENCHMARK(BM_copies_parallel)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_copies_serial)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_membership_parallel)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_membership_serial)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_pairs_parallel)->Arg(12)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_pairs_serial)->Arg(12)->Arg(18)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
