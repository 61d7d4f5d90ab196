#include <benchmark/benchmark.h>

#include <numeric>

#include "mindeg/bounds.hpp"
#include "mindeg/generators.hpp"
#include "mindeg/mindegree.hpp"
#include "mindeg/oracle.hpp"
#include "mindeg/ufiller.hpp"

using namespace mindeg;

namespace {

OrderingConfig backend(int kind) {
  OrderingConfig c;
  c.backend = kind == 0 ? BackendKind::dense : BackendKind::ordered_set;
  return c;
}

void report(benchmark::State& state, const Graph& g, const EliminationResult& r) {
  const AttemptBounds b = evaluate_attempt_bounds(g, r);
  if (!b.all_hold()) state.SkipWithError("insertion-attempt bound violated");
  state.counters["n"] = static_cast<double>(g.num_vertices());
  state.counters["m"] = static_cast<double>(g.num_edges());
  state.counters["m_plus"] = static_cast<double>(r.m_plus);
  state.counters["attempts"] = static_cast<double>(r.insertion_attempts);
}

void BM_RandomGnm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = random_gnm(n, 4 * n, 42);
  const OrderingConfig c = backend(static_cast<int>(state.range(1)));
  EliminationResult r;
  for (auto _ : state) {
    r = fast_minimum_degree(g, c);
    benchmark::DoNotOptimize(r.m_plus);
  }
  report(state, g, r);
}
BENCHMARK(BM_RandomGnm)->ArgsProduct({{500, 1000, 2000, 4000}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_Grid(benchmark::State& state) {
  const auto side = static_cast<std::size_t>(state.range(0));
  const Graph g = grid_graph(side, side);
  const OrderingConfig c = backend(static_cast<int>(state.range(1)));
  EliminationResult r;
  for (auto _ : state) {
    r = fast_minimum_degree(g, c);
    benchmark::DoNotOptimize(r.m_plus);
  }
  report(state, g, r);
}
BENCHMARK(BM_Grid)->ArgsProduct({{16, 32, 64}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_MinDegreeFiller(benchmark::State& state) {
  std::vector<VertexId> u(static_cast<std::size_t>(state.range(0)));
  std::iota(u.begin(), u.end(), 0u);
  const Graph g = min_degree_filler(u).graph;
  const OrderingConfig c = backend(static_cast<int>(state.range(1)));
  EliminationResult r;
  for (auto _ : state) {
    r = fast_minimum_degree(g, c);
    benchmark::DoNotOptimize(r.m_plus);
  }
  report(state, g, r);
}
BENCHMARK(BM_MinDegreeFiller)->ArgsProduct({{32, 64, 128, 256}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_NaiveOracle(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = random_gnm(n, 4 * n, 42);
  for (auto _ : state) {
    auto r = oracle::naive_minimum_degree(g, TieBreak::smallest_id);
    benchmark::DoNotOptimize(r.m_plus);
  }
}
BENCHMARK(BM_NaiveOracle)->Arg(250)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
