#include <gtest/gtest.h>

#include "atlas.hpp"
#include "generators.hpp"
#include "linegraph/catalog.hpp"
#include "linegraph/errors.hpp"
#include "linegraph/graph.hpp"
#include "linegraph/isomorphism.hpp"
#include "oracles.hpp"

using namespace linegraph;
using namespace linegraph::testing;

TEST(Graph, EdgesAreNormalizedAndDeduplicated) {
  Graph g(3, {{1, 0}, {0, 1}, {2, 1}});
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g.edge(0), (EdgeId{0, 1}));
  EXPECT_EQ(g.edge(1), (EdgeId{1, 2}));
  EXPECT_TRUE(g.adjacent(1, 0));
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_EQ(g.edge_index(2, 1), 1u);
  EXPECT_FALSE(g.edge_index(0, 2).has_value());
}

TEST(Graph, RejectsSelfLoopsAndOutOfRange) {
  EXPECT_THROW(Graph(2, {{1, 1}}), InvalidInput);
  EXPECT_THROW(Graph(2, {{0, 2}}), InvalidInput);
  EXPECT_THROW(EdgeId::of(3, 3), InvalidInput);
}

TEST(Graph, SharedEndpoint) {
  EXPECT_EQ(EdgeId::of(0, 1).shared_endpoint(EdgeId::of(1, 2)), 1u);
  EXPECT_FALSE(EdgeId::of(0, 1).shared_endpoint(EdgeId::of(2, 3)).has_value());
  EXPECT_FALSE(EdgeId::of(0, 1).shared_endpoint(EdgeId::of(0, 1)).has_value());
}

TEST(InducedSubgraph, CliqueIsHereditary) {
  auto sub = induced_subgraph(complete_graph(4), {0, 2, 3});
  EXPECT_EQ(sub.graph, complete_graph(3));
  EXPECT_EQ(sub.original, (std::vector<Vertex>{0, 2, 3}));
}

TEST(InducedSubgraph, ConsecutiveCycleVerticesGivePath) {
  EXPECT_EQ(induced_subgraph(cycle_graph(5), {0, 1, 2}).graph, path_graph(3));
}

TEST(InducedSubgraph, ClawCenterAndLeafGiveK2) {
  const Graph& claw = beineke_graphs().front().graph;
  EXPECT_EQ(induced_subgraph(claw, {0, 2}).graph, complete_graph(2));
}

TEST(InducedSubgraph, RejectsOutOfRange) { EXPECT_THROW(induced_subgraph(path_graph(3), {0, 5}), InvalidInput); }

TEST(InducedSubgraph, WholeVertexSetIsIdentity) {
  for (const auto& g : atlas()) {
    auto sub = induced_subgraph(g, VertexSet::range(g.order()));
    ASSERT_EQ(sub.graph, g);
    ASSERT_TRUE(is_isomorphism(g, sub.graph, sub.original));
  }
}

TEST(ConnectedComponents, Examples) {
  auto parts = connected_components(disjoint_union(complete_graph(3), complete_graph(2)));
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0], (VertexSet{0, 1, 2}));
  EXPECT_EQ(parts[1], (VertexSet{3, 4}));
  EXPECT_EQ(connected_components(edgeless_graph(4)).size(), 4u);
  EXPECT_EQ(connected_components(petersen_graph()).size(), 1u);
  EXPECT_TRUE(connected_components(Graph(0)).empty());
}

TEST(ConnectedComponents, OrderedByMinimumVertex) {
  Graph g(6, {{5, 1}, {0, 4}, {2, 3}});
  auto parts = connected_components(g);
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[0], (VertexSet{0, 4}));
  EXPECT_EQ(parts[1], (VertexSet{1, 5}));
  EXPECT_EQ(parts[2], (VertexSet{2, 3}));
}

TEST(IsClique, Examples) {
  EXPECT_TRUE(is_clique(complete_graph(4), {0, 1, 2, 3}));
  EXPECT_FALSE(is_clique(path_graph(3), {0, 1, 2}));
  EXPECT_TRUE(is_clique(path_graph(3), {2}));
  EXPECT_TRUE(is_clique(path_graph(3), {}));
  EXPECT_THROW(is_clique(path_graph(3), {7}), InvalidInput);
}

TEST(LineGraph, NumbersVerticesByEdgeOrder) {
  Graph g(4, {{0, 1}, {1, 2}, {2, 3}});
  auto lg = line_graph(g);
  EXPECT_EQ(lg.root_edge, g.edges());
  EXPECT_EQ(lg.graph, path_graph(3));
  EXPECT_EQ(line_graph(edgeless_graph(5)).graph.order(), 0u);
}

TEST(LineGraph, MatchesDefinitionAndDegreeLaw) {
  for (const auto& g : atlas()) {
    auto lg = line_graph(g);
    ASSERT_EQ(lg.graph, definition_line_graph(g)) << g.order();
    for (std::size_t i = 0; i < g.size(); ++i) {
      const EdgeId& e = g.edge(i);
      ASSERT_EQ(lg.graph.degree(static_cast<Vertex>(i)), g.degree(e.u) + g.degree(e.v) - 2);
    }
  }
}

TEST(Generators, NamedGraphs) {
  EXPECT_EQ(complete_graph(5).size(), 10u);
  EXPECT_EQ(cycle_graph(5).size(), 5u);
  EXPECT_EQ(star_graph(3).degree(0), 3u);
  EXPECT_EQ(complete_bipartite_graph(2, 3).size(), 6u);
  auto petersen = petersen_graph();
  EXPECT_EQ(petersen.size(), 15u);
  EXPECT_EQ(degree_sequence(petersen), std::vector<std::size_t>(10, 3));
  EXPECT_EQ(complement(complete_graph(4)).size(), 0u);
  EXPECT_THROW(cycle_graph(2), InvalidInput);
}

TEST(Generators, RelabelPreservesStructure) {
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    Graph g = random_graph(rng, 8, 0.4);
    auto p = random_permutation(rng, 8);
    Graph h = relabel(g, p);
    ASSERT_EQ(h.size(), g.size());
    for (const auto& e : g.edges()) ASSERT_TRUE(h.adjacent(p[e.u], p[e.v]));
  }
}

TEST(Generators, ConnectedGraphCountsMatchAtlas) {
  // Connected graphs with m <= 6 edges have at most 7 vertices, so the atlas holds them all.
  for (std::size_t m = 1; m <= 6; ++m) {
    std::size_t in_atlas = 0;
    for (const auto& g : atlas())
      if (g.size() == m && is_connected(g)) ++in_atlas;
    EXPECT_EQ(connected_graphs_with_edges(m).size(), in_atlas) << m;
  }
}

TEST(Generators, ConnectedGraphCountsByEdges) {
  // Connected graphs by number of edges, m = 1..10.
  const std::vector<std::size_t> expected{1, 1, 3, 5, 12, 30, 79, 227, 710, 2322};
  for (std::size_t m = 1; m <= expected.size(); ++m)
    EXPECT_EQ(connected_graphs_with_edges(m).size(), expected[m - 1]) << m;
}
