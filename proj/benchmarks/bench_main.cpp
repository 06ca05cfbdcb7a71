#include "listcrit/alon_tarsi.hpp"
#include "listcrit/builders.hpp"
#include "listcrit/canonical.hpp"
#include "listcrit/fractional.hpp"
#include "listcrit/gallai.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace listcrit;
namespace gb = listcrit::graphs;

namespace {

Graph random_graph(int n, double p, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<> coin(0.0, 1.0);
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng) < p) es.push_back({i, j});
  return Graph(n, es);
}

void BM_independence_number(benchmark::State& state) {
  Graph g = random_graph(static_cast<int>(state.range(0)), 0.4, 12345);
  for (auto _ : state) benchmark::DoNotOptimize(independence_number(g));
}
BENCHMARK(BM_independence_number)->Arg(12)->Arg(18)->Arg(22);

void BM_mic(benchmark::State& state) {
  Graph g = random_graph(static_cast<int>(state.range(0)), 0.4, 999);
  for (auto _ : state) benchmark::DoNotOptimize(mic(g));
}
BENCHMARK(BM_mic)->Arg(12)->Arg(18);

void BM_chromatic_number(benchmark::State& state) {
  Graph g = gb::moser_spindle();
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(g));
}
BENCHMARK(BM_chromatic_number);

void BM_canonical_form(benchmark::State& state) {
  Graph g = gb::petersen();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_canonical_form);

void BM_enumerate_gallai_trees(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_gallai_trees(static_cast<int>(state.range(0)), 5));
}
BENCHMARK(BM_enumerate_gallai_trees)->Arg(7)->Arg(8)->Arg(9);

void BM_is_f_at(benchmark::State& state) {
  Graph g = random_graph(8, 0.45, 4242);
  ListSizes f(8, 3);
  for (auto _ : state) benchmark::DoNotOptimize(is_f_at(g, f));
}
BENCHMARK(BM_is_f_at);

void BM_choosability(benchmark::State& state) {
  Graph g = gb::complete_bipartite(3, 3);
  ListSizes f(6, 3);
  for (auto _ : state) benchmark::DoNotOptimize(choosability_brute_force(g, f));
}
BENCHMARK(BM_choosability);

void BM_optimize_quadruple(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(optimize_quadruple(static_cast<int>(state.range(0)), Theorem::t7));
}
BENCHMARK(BM_optimize_quadruple)->Arg(7)->Arg(12)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
