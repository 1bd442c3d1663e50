#include <gtest/gtest.h>

#include <thread>

#include "generators.hpp"
#include "linegraph/canonical.hpp"
#include "linegraph/catalog.hpp"
#include "linegraph/errors.hpp"
#include "linegraph/krausz.hpp"
#include "oracles.hpp"

using namespace linegraph;
using namespace linegraph::testing;

namespace {

// Relation of component c of l, transported onto vertices 0..s-1 by rank.
std::vector<std::uint32_t> pulled_back(const Graph& l, const LineGraphRelation& r, const VertexSet& c) {
  auto sub = induced_subgraph(l, c);
  std::vector<std::uint32_t> labels;
  for (const auto& e : sub.graph.edges())
    labels.push_back(r.class_of(*l.edge_index(sub.original[e.u], sub.original[e.v])));
  return LineGraphRelation(labels).labels();
}

}  // namespace

TEST(ComponentRanking, RanksAndSizes) {
  Graph g(6, {{5, 1}, {0, 4}, {2, 3}, {4, 2}});
  ComponentRanking rank(g);
  EXPECT_EQ(rank.component_size(0), 4u);
  EXPECT_EQ(rank.rank(0), 1u);
  EXPECT_EQ(rank.rank(2), 2u);
  EXPECT_EQ(rank.rank(3), 3u);
  EXPECT_EQ(rank.rank(4), 4u);
  EXPECT_EQ(rank.rank(5), 2u);
  EXPECT_EQ(rank.nth(3, 4), 3u);
  EXPECT_EQ(rank.nth(1, 5), 1u);
  EXPECT_FALSE(rank.nth(3, 5));
  EXPECT_FALSE(rank.nth(0, 5));
  // Component {0,2,3,4}: edges 0-4, 2-3, 2-4 become 0-3, 1-2, 1-3.
  EXPECT_EQ(rank.canonical_form(3), Graph(4, {{0, 3}, {1, 2}, {1, 3}}));
}

TEST(LeastRelation, IsLeastAmongAllRelations) {
  for (const auto& l : line_graphs_up_to(6)) {
    if (!is_connected(l) || l.order() == 0) continue;
    auto brute = brute_relations(l);
    ASSERT_FALSE(brute.empty());
    EXPECT_EQ(least_relation(l).labels(), brute.front());
  }
  EXPECT_THROW(least_relation(star_graph(3)), NotLineGraph);
}

TEST(CanonicalRelation, Examples) {
  Graph two_triangles = disjoint_union(complete_graph(3), complete_graph(3));
  auto r = canonical_relation(two_triangles);
  EXPECT_FALSE(validate_relation(two_triangles, r));
  auto parts = connected_components(two_triangles);
  EXPECT_EQ(pulled_back(two_triangles, r, parts[0]), pulled_back(two_triangles, r, parts[1]));

  Graph k0 = k0_truncation(1, 2);
  auto r0 = canonical_relation(k0);
  EXPECT_EQ(r0.class_count(), 2u);
}

TEST(CanonicalRelation, InterleavedLabelingsGetTheSameStructure) {
  // Two triangles on {0,2,4} and {1,3,5}, plus two paths with interleaved IDs.
  Graph g(10, {{0, 2}, {2, 4}, {0, 4}, {1, 3}, {3, 5}, {1, 5}, {6, 8}, {8, 7}, {9, 6}});
  auto r = canonical_relation(g);
  EXPECT_FALSE(validate_relation(g, r));
  ComponentRanking rank(g);
  std::map<std::string, std::vector<std::uint32_t>> by_form;
  for (const auto& c : rank.components()) {
    std::string key = emit_graph6(rank.canonical_form(c[0]));
    auto mine = pulled_back(g, r, c);
    auto [it, fresh] = by_form.emplace(key, mine);
    if (!fresh) EXPECT_EQ(it->second, mine);
  }
}

TEST(CanonicalRelation, NamesTheFailingComponent) {
  Graph g = disjoint_union(complete_graph(3), star_graph(3));
  try {
    canonical_relation(g);
    FAIL() << "expected NotLineGraph";
  } catch (const NotLineGraph& e) {
    EXPECT_NE(std::string(e.what()).find("vertex 3"), std::string::npos) << e.what();
  }
}

TEST(CanonicalRelation, RandomMixturesValidate) {
  Rng rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g(0);
    for (int c = 0; c < 30; ++c) g = disjoint_union(g, line_graph(random_connected_graph(rng, 5, c % 4)).graph);
    g = random_relabel(rng, g);
    LocalRelationMemo memo;
    auto r = canonical_relation(g, memo);
    ASSERT_FALSE(validate_relation(g, r));
    ASSERT_EQ(r, canonical_relation(g));
    ASSERT_LE(memo.size(), 30u);
  }
}

TEST(RelationMemo, ConcurrentCallersSeeOneValue) {
  Rng rng(3);
  std::vector<Graph> forms;
  for (int i = 0; i < 20; ++i) forms.push_back(line_graph(random_connected_graph(rng, 6, i % 5)).graph);
  RelationMemo memo;
  std::vector<std::vector<LineGraphRelation>> seen(8);
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < seen.size(); ++t)
    threads.emplace_back([&, t] {
      for (int round = 0; round < 5; ++round)
        for (const auto& f : forms) seen[t].push_back(memo.get_or_compute(f));
    });
  for (auto& th : threads) th.join();
  for (std::size_t t = 1; t < seen.size(); ++t) EXPECT_EQ(seen[t], seen[0]);
  EXPECT_LE(memo.size(), forms.size());
}
