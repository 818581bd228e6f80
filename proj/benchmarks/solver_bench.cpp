#include <benchmark/benchmark.h>

#include "bcdom/bcdom.hpp"

namespace {

using namespace bcdom;

Graph bench_graph(std::int64_t n) { return gen_d_degenerate(static_cast<std::size_t>(n), 3, 17).graph; }

void BM_Classical(benchmark::State& state) {
  const Graph g = bench_graph(state.range(0));
  const VertexSet all = VertexSet::all(g.num_vertices());
  for (auto _ : state) benchmark::DoNotOptimize(solve_classical(g, all));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Classical)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_FixedI(benchmark::State& state) {
  const Graph g = bench_graph(state.range(0));
  const SolverParams params{static_cast<unsigned>(state.range(1)), std::nullopt};
  for (auto _ : state) benchmark::DoNotOptimize(solve_fixed_i(g, params));
}
BENCHMARK(BM_FixedI)->ArgsProduct({{256, 4096}, {2, 3, 5}});

void BM_Auto(benchmark::State& state) {
  const Graph g = bench_graph(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_auto(g));
}
BENCHMARK(BM_Auto)->Arg(256)->Arg(4096);

void BM_Hybrid(benchmark::State& state) {
  const Graph g = bench_graph(state.range(0));
  const SolverParams params{3U, std::nullopt};
  for (auto _ : state) benchmark::DoNotOptimize(solve_hybrid(g, params));
}
BENCHMARK(BM_Hybrid)->Arg(256)->Arg(1024);

void BM_Exact(benchmark::State& state) {
  const Graph g = gen_gnp(static_cast<std::size_t>(state.range(0)), 0.15, 5);
  const VertexSet all = VertexSet::all(g.num_vertices());
  for (auto _ : state) benchmark::DoNotOptimize(exact_min_dominating_set(g, all));
}
BENCHMARK(BM_Exact)->DenseRange(16, 40, 8)->Unit(benchmark::kMillisecond);

void BM_Biclique(benchmark::State& state) {
  const Graph g = gen_gnp(static_cast<std::size_t>(state.range(0)), 0.3, 9);
  for (auto _ : state) benchmark::DoNotOptimize(has_biclique(g, 3, 3));
}
BENCHMARK(BM_Biclique)->Arg(40)->Arg(80);

}  // namespace

BENCHMARK_MAIN();
