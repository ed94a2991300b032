#include <benchmark/benchmark.h>

#include <random>

#include "ribbon/generate.hpp"
#include "ribbon/oracle.hpp"
#include "ribbon/quasitree.hpp"
#include "ribbon/virtual_links.hpp"

namespace {

ribbon::RibbonGraph medium_graph(int edges) {
  std::mt19937 rng(12345);
  return ribbon::random_connected_graph(edges, rng);
}

void BM_BoundaryTrace(benchmark::State& state) {
  ribbon::RibbonGraph g = medium_graph(static_cast<int>(state.range(0)));
  ribbon::EdgeSet all = g.edge_set();
  for (auto _ : state) benchmark::DoNotOptimize(ribbon::boundary_components(g, all));
}
BENCHMARK(BM_BoundaryTrace)->Arg(6)->Arg(10)->Arg(14);

void BM_PartialDual(benchmark::State& state) {
  ribbon::RibbonGraph g = medium_graph(static_cast<int>(state.range(0)));
  ribbon::EdgeSet half;
  int i = 0;
  for (const auto& label : g.edge_set())
    if (i++ % 2 == 0) half.insert(label);
  for (auto _ : state) benchmark::DoNotOptimize(ribbon::partial_dual(g, half));
}
BENCHMARK(BM_PartialDual)->Arg(6)->Arg(10)->Arg(14);

void BM_SignedSubgraphSum(benchmark::State& state) {
  ribbon::RibbonGraph g = medium_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ribbon::signed_br_polynomial(g));
}
BENCHMARK(BM_SignedSubgraphSum)->Arg(6)->Arg(8)->Arg(10);

void BM_QuasiTreeExpansion(benchmark::State& state) {
  ribbon::RibbonGraph g = medium_graph(static_cast<int>(state.range(0)));
  ribbon::EdgeOrder order = ribbon::default_order(g);
  for (auto _ : state) benchmark::DoNotOptimize(ribbon::qt_expansion_signed(g, order));
}
BENCHMARK(BM_QuasiTreeExpansion)->Arg(6)->Arg(8)->Arg(10);

void BM_KauffmanStatesum(benchmark::State& state) {
  std::mt19937 rng(777);
  ribbon::VirtualDiagram d = ribbon::random_gauss_code(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(ribbon::kauffman_statesum(d));
}
BENCHMARK(BM_KauffmanStatesum)->Arg(4)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
