#include <benchmark/benchmark.h>

#include <random>

#include "linegraph/canonical.hpp"
#include "linegraph/catalog.hpp"
#include "linegraph/krausz.hpp"
#include "linegraph/recognition.hpp"
#include "linegraph/rootgraph.hpp"

using namespace linegraph;

namespace {

Graph random_connected(std::mt19937_64& rng, std::size_t n, std::size_t extra) {
  std::vector<EdgeId> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back(EdgeId::of(v, static_cast<Vertex>(rng() % v)));
  for (std::size_t i = 0; i < extra; ++i) {
    auto a = static_cast<Vertex>(rng() % n), b = static_cast<Vertex>(rng() % n);
    if (a != b) edges.push_back(EdgeId::of(a, b));
  }
  return Graph(n, edges);
}

// Line graph of a random connected root with the given number of root vertices.
Graph sample_line_graph(std::size_t root_order, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return line_graph(random_connected(rng, root_order, root_order / 2)).graph;
}

}  // namespace

static void BM_RecognizeBeineke(benchmark::State& state) {
  Graph l = sample_line_graph(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(is_line_graph_beineke(l).is_line_graph);
  state.counters["vertices"] = static_cast<double>(l.order());
}
BENCHMARK(BM_RecognizeBeineke)->Arg(6)->Arg(8)->Arg(10);

static void BM_RecognizeKrausz(benchmark::State& state) {
  Graph l = sample_line_graph(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(is_line_graph_krausz(l));
  state.counters["vertices"] = static_cast<double>(l.order());
}
BENCHMARK(BM_RecognizeKrausz)->Arg(6)->Arg(8)->Arg(10);

static void BM_EnumerateDecompositions(benchmark::State& state) {
  Graph l = sample_line_graph(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_decompositions(l));
}
BENCHMARK(BM_EnumerateDecompositions)->Arg(5)->Arg(7)->Arg(9);

static void BM_CanonicalRelation(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::vector<EdgeId> edges;
  std::size_t order = 0;
  for (std::int64_t c = 0; c < state.range(0); ++c) {
    Graph component = line_graph(random_connected(rng, 2 + rng() % 5, rng() % 3)).graph;
    for (const auto& e : component.edges())
      edges.push_back({static_cast<Vertex>(e.u + order), static_cast<Vertex>(e.v + order)});
    order += component.order();
  }
  Graph l(order, edges);
  for (auto _ : state) {
    RelationMemo memo;
    benchmark::DoNotOptimize(canonical_relation(l, memo));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CanonicalRelation)->Arg(100)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_K0Pipeline(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const std::size_t m = 10;
  Limits limits;
  limits.krausz_component_cap = 1024;
  for (auto _ : state) {
    Graph l = k0_truncation(k, m, limits);
    auto report = verify_roundtrip(l, limits);
    benchmark::DoNotOptimize(report);
    benchmark::DoNotOptimize(chromatic_number_exact(l, limits.coloring_cap));
  }
}
BENCHMARK(BM_K0Pipeline)->Arg(0)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
