#include <gtest/gtest.h>

#include "atlas.hpp"
#include "generators.hpp"
#include "linegraph/catalog.hpp"
#include "linegraph/errors.hpp"
#include "linegraph/krausz.hpp"
#include "linegraph/recognition.hpp"
#include "oracles.hpp"

using namespace linegraph;
using namespace linegraph::testing;

namespace {

const Graph& k3() {
  static const Graph g = complete_graph(3);
  return g;
}

std::vector<std::vector<Vertex>> raw(const Decomposition& d) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& s : d) out.push_back(s.members());
  return out;
}

Decomposition sets(std::vector<std::vector<Vertex>> lists) {
  std::vector<VertexSet> out;
  for (auto& l : lists) out.emplace_back(std::move(l));
  return Decomposition(std::move(out));
}

}  // namespace

TEST(ValidateDecomposition, Examples) {
  EXPECT_FALSE(validate_decomposition(k3(), sets({{0, 1}, {1, 2}, {0, 2}})));
  EXPECT_FALSE(validate_decomposition(k3(), sets({{0, 1, 2}, {0}, {1}, {2}})));
  auto v = validate_decomposition(k3(), sets({{0, 1, 2}}));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, ViolationKind::vertex_cardinality);
  EXPECT_EQ(v->vertex, 0u);
}

TEST(ValidateDecomposition, CheckOrder) {
  Graph p3 = path_graph(3);
  auto clique = validate_decomposition(p3, sets({{0, 1, 2}}));
  ASSERT_TRUE(clique);
  EXPECT_EQ(clique->kind, ViolationKind::not_clique);
  EXPECT_FALSE(p3.adjacent(clique->edges[0].u, clique->edges[0].v));

  auto overlap = validate_decomposition(k3(), sets({{0, 1, 2}, {0, 1}}));
  ASSERT_TRUE(overlap);
  EXPECT_EQ(overlap->kind, ViolationKind::edge_overlap);
  EXPECT_EQ(overlap->edges[0], (EdgeId{0, 1}));

  auto uncovered = validate_decomposition(k3(), sets({{0, 1}, {2}}));
  ASSERT_TRUE(uncovered);
  EXPECT_EQ(uncovered->kind, ViolationKind::edge_uncovered);
  EXPECT_EQ(uncovered->edges[0], (EdgeId{0, 2}));

  EXPECT_THROW(validate_decomposition(k3(), sets({{0, 7}})), InvalidInput);
  EXPECT_THROW(validate_decomposition(k3(), Decomposition({VertexSet{}})), InvalidInput);
}

TEST(ValidateDecomposition, AgreesWithOracleOnPerturbations) {
  Rng rng(17);
  for (const auto& l : atlas()) {
    if (l.order() == 0 || l.order() > 6) continue;
    for (const auto& d : enumerate_decompositions(l)) {
      ASSERT_TRUE(oracle_is_decomposition(l, raw(d)));
      // Drop, add or grow one set and compare verdicts.
      auto lists = raw(d);
      std::uniform_int_distribution<std::size_t> pick(0, lists.size() - 1);
      std::uniform_int_distribution<Vertex> vertex(0, static_cast<Vertex>(l.order() - 1));
      for (int trial = 0; trial < 3; ++trial) {
        auto mutated = lists;
        switch (trial) {
          case 0: mutated.erase(mutated.begin() + static_cast<std::ptrdiff_t>(pick(rng))); break;
          case 1: mutated.push_back({vertex(rng)}); break;
          case 2: mutated[pick(rng)].push_back(vertex(rng)); break;
        }
        std::vector<VertexSet> vs;
        for (auto& s : mutated) vs.emplace_back(s);
        Decomposition candidate(vs);
        // Duplicate sets collapse in Decomposition, so compare against the collapsed family.
        ASSERT_EQ(!validate_decomposition(l, candidate).has_value(), oracle_is_decomposition(l, raw(candidate)));
      }
    }
  }
}

TEST(ValidateDecomposition, DistinctSetsShareAtMostOneVertex) {
  for (const auto& l : atlas())
    for (const auto& d : enumerate_decompositions(l))
      for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) {
          std::size_t common = 0;
          for (Vertex x : d.sets()[i]) common += d.sets()[j].contains(x);
          ASSERT_LE(common, 1u);
        }
}

TEST(RelationOf, Examples) {
  EXPECT_EQ(relation_of(k3(), sets({{0, 1}, {1, 2}, {0, 2}})).class_count(), 3u);
  EXPECT_EQ(relation_of(k3(), sets({{0, 1, 2}, {0}, {1}, {2}})).class_count(), 1u);
  EXPECT_EQ(relation_of(path_graph(3), sets({{0, 1}, {1, 2}, {0}, {2}})).class_count(), 2u);
  EXPECT_THROW(relation_of(k3(), sets({{0, 1, 2}})), InvalidStructure);
}

TEST(RelationOf, LabelsFollowLeastEdge) {
  // K4-: edges 01 02 03 12 13; the triangle 013 holds edges 01, 03, 13.
  Graph k4m = singular_graphs()[1].graph;
  auto r = relation_of(k4m, sets({{0, 1, 3}, {0, 2}, {1, 2}, {3}}));
  EXPECT_EQ(r.labels(), (std::vector<std::uint32_t>{0, 1, 0, 2, 0}));
}

TEST(DecompositionOf, Examples) {
  EXPECT_EQ(decomposition_of(k3(), LineGraphRelation({0, 0, 0})), sets({{0, 1, 2}, {0}, {1}, {2}}));
  EXPECT_EQ(decomposition_of(k3(), LineGraphRelation({0, 1, 2})), sets({{0, 1}, {1, 2}, {0, 2}}));
  EXPECT_EQ(decomposition_of(Graph(1), LineGraphRelation(std::vector<std::uint32_t>{})), sets({{0}}));
}

TEST(ValidateRelation, Examples) {
  auto k4 = validate_relation(complete_graph(4), LineGraphRelation({0, 1, 2, 3, 4, 5}));
  ASSERT_TRUE(k4);
  EXPECT_EQ(k4->kind, ViolationKind::too_many_classes_at_vertex);
  EXPECT_FALSE(validate_relation(k3(), LineGraphRelation({0, 0, 0})));
  auto p3 = validate_relation(path_graph(3), LineGraphRelation({0, 0}));
  ASSERT_TRUE(p3);
  EXPECT_EQ(p3->kind, ViolationKind::not_clique);
  EXPECT_THROW(validate_relation(k3(), LineGraphRelation({0, 0})), InvalidInput);
}

TEST(ValidateRelation, PartialTriangleClassIsNotAClique) {
  // Two edges of a triangle in one class and the third elsewhere.
  auto v = validate_relation(k3(), LineGraphRelation({0, 0, 1}));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, ViolationKind::not_clique);
}

TEST(ValidateRelation, AgreesWithOracleOnRandomLabels) {
  Rng rng(23);
  for (const auto& l : atlas()) {
    if (l.order() > 6 || l.size() == 0) continue;
    std::uniform_int_distribution<std::uint32_t> label(0, static_cast<std::uint32_t>(std::min<std::size_t>(l.size(), 4)));
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<std::uint32_t> labels(l.size());
      for (auto& x : labels) x = label(rng);
      ASSERT_EQ(!validate_relation(l, LineGraphRelation(labels)).has_value(), oracle_is_relation(l, labels));
    }
  }
}

TEST(ValidateEdgeRelation, MatchesLabelValidation) {
  for (const auto& l : atlas()) {
    if (l.order() > 5) continue;
    for (const auto& labels : brute_relations(l)) {
      LineGraphRelation r(labels);
      auto pred = [&](std::size_t e, std::size_t f) { return r.related(e, f); };
      ASSERT_FALSE(validate_edge_relation(l, pred));
      ASSERT_EQ(relation_from_pairs(l, pred), r);
    }
  }
  // Not transitive: 01~02, 02~12 on K3 but 01 !~ 12.
  auto bad = validate_edge_relation(k3(), [](std::size_t e, std::size_t f) {
    return e == f || (e + f == 1) || (e + f == 3);
  });
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->kind, ViolationKind::not_equivalence);
  EXPECT_THROW(relation_from_pairs(path_graph(3), [](std::size_t, std::size_t) { return true; }), InvalidStructure);
}

TEST(RestrictRelation, Examples) {
  auto r = relation_of(k3(), sets({{0, 1, 2}, {0}, {1}, {2}}));
  auto same = restrict_relation(k3(), r, {0, 1, 2});
  EXPECT_EQ(same.relation, r);

  const Graph& octahedron = singular_graphs()[3].graph;
  for (const auto& rel : enumerate_relations(octahedron)) {
    // Vertices 0, 2, 4 are pairwise adjacent: the complement's edges are 01, 23, 45.
    auto tri = restrict_relation(octahedron, rel, {0, 2, 4});
    EXPECT_EQ(tri.subgraph.graph, complete_graph(3));
    EXPECT_TRUE(tri.relation.class_count() == 1 || tri.relation.class_count() == 3);
  }
  auto none = restrict_relation(octahedron, enumerate_relations(octahedron).front(), {0, 1});
  EXPECT_EQ(none.relation.edge_count(), 0u);
}

TEST(Enumerate, Examples) {
  auto k3_all = enumerate_decompositions(k3());
  ASSERT_EQ(k3_all.size(), 2u);
  EXPECT_EQ(k3_all[0], sets({{0, 1, 2}, {0}, {1}, {2}}));
  EXPECT_EQ(k3_all[1], sets({{0, 1}, {1, 2}, {0, 2}}));

  // K4- with the edge 23 missing.
  auto k4m = enumerate_decompositions(singular_graphs()[1].graph);
  ASSERT_EQ(k4m.size(), 2u);
  EXPECT_EQ(k4m[0], sets({{0, 1, 2}, {0, 3}, {1, 3}, {2}}));
  EXPECT_EQ(k4m[1], sets({{0, 1, 3}, {0, 2}, {1, 2}, {3}}));

  EXPECT_EQ(enumerate_decompositions(path_graph(4)).size(), 1u);
  EXPECT_TRUE(enumerate_decompositions(star_graph(3)).empty());
  EXPECT_THROW(enumerate_decompositions(edgeless_graph(17)), CapExceeded);
}

TEST(Enumerate, SingularMultiplicities) {
  const std::vector<std::size_t> golden{2, 2, 2, 2};
  const auto& s = singular_graphs();
  for (std::size_t i = 0; i < s.size(); ++i) {
    EXPECT_EQ(enumerate_decompositions(s[i].graph).size(), golden[i]) << s[i].name;
    EXPECT_EQ(brute_relations(s[i].graph).size(), golden[i]) << s[i].name;
  }
}

TEST(Enumerate, CountsMatchBruteForceRelations) {
  for (const auto& l : atlas()) {
    auto all = enumerate_decompositions(l);
    auto brute = brute_relations(l);
    ASSERT_EQ(all.size(), brute.size()) << l.order() << " " << l.size();
    std::vector<std::vector<std::uint32_t>> ours;
    for (const auto& d : all) {
      ASSERT_TRUE(oracle_is_decomposition(l, raw(d)));
      ours.push_back(relation_of(l, d).labels());
    }
    std::sort(ours.begin(), ours.end());
    ASSERT_EQ(ours, brute);
  }
}

TEST(Enumerate, SortedAndDuplicateFree) {
  Graph g = disjoint_union(k3(), disjoint_union(k3(), path_graph(2)));
  auto all = enumerate_decompositions(g);
  EXPECT_EQ(all.size(), 4u);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  EXPECT_EQ(std::adjacent_find(all.begin(), all.end()), all.end());
}

TEST(Singular, Examples) {
  EXPECT_TRUE(is_singular(singular_graphs()[3].graph));
  EXPECT_FALSE(is_singular(complete_graph(5)));
  auto parts = singular_components(disjoint_union(k3(), path_graph(4)));
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(parts[0], (VertexSet{0, 1, 2}));
}

TEST(Uniqueness, NonsingularConnectedLineGraphsUpToSeven) {
  for (const auto& l : connected_atlas(2, 7)) {
    auto all = enumerate_decompositions(l);
    if (all.empty()) continue;
    ASSERT_EQ(all.size(), is_singular(l) ? 2u : 1u);
  }
}

TEST(Uniqueness, RelationsAgreeOffSingularComponents) {
  for (const auto& l : line_graphs_up_to(7)) {
    auto relations = enumerate_relations(l);
    for (const auto& c : connected_components(l)) {
      auto sub = induced_subgraph(l, c).graph;
      if (is_singular(sub)) continue;
      for (std::size_t i = 1; i < relations.size(); ++i)
        ASSERT_EQ(restrict_relation(l, relations[0], c).relation, restrict_relation(l, relations[i], c).relation);
    }
  }
}

TEST(StarRelation, ContainsEveryValidRelation) {
  for (const auto& l : line_graphs_up_to(8))
    for (const auto& r : enumerate_relations(l)) ASSERT_TRUE(star_contains(l, r));
  EXPECT_FALSE(star_related(path_graph(3), EdgeId{0, 1}, EdgeId{1, 2}));
  EXPECT_TRUE(star_related(k3(), EdgeId{0, 1}, EdgeId{1, 2}));
}

TEST(Nice, SizeAndConnectivity) {
  Graph l = line_graph(path_graph(10)).graph;  // P9
  EXPECT_TRUE(is_nice(l, {0, 1, 2, 3, 4, 5, 6}));
  EXPECT_FALSE(is_nice(l, {0, 1, 2, 3, 4, 5}));
  EXPECT_FALSE(is_nice(l, {0, 1, 2, 3, 4, 5, 7}));
  // Nice subgraphs of a line graph are nonsingular, so their decomposition is unique.
  Rng rng(31);
  for (int i = 0; i < 40; ++i) {
    Graph big = line_graph(random_connected_graph(rng, 7, 4)).graph;
    VertexSet all = VertexSet::range(big.order());
    if (!is_nice(big, all) || big.order() > 16) continue;
    EXPECT_EQ(enumerate_decompositions(big).size(), 1u);
  }
}

TEST(TextFormat, RoundTrips) {
  Graph l = singular_graphs()[3].graph;
  for (const auto& d : enumerate_decompositions(l)) {
    EXPECT_EQ(parse_decomposition(format_decomposition(d)), d);
    auto r = relation_of(l, d);
    EXPECT_EQ(parse_relation(l, format_relation(l, r)), r);
  }
  EXPECT_EQ(format_decomposition(sets({{0, 1}, {2}})), "0 1\n2\n");
  EXPECT_THROW(parse_decomposition("0 x\n"), ParseError);
  EXPECT_THROW(parse_relation(k3(), "0-1 0-2\n"), ParseError);    // 1-2 has no class
  EXPECT_THROW(parse_relation(k3(), "0-1 0-2 1-2\n0-1\n"), ParseError);
  EXPECT_THROW(parse_relation(path_graph(3), "0-2\n"), ParseError);
}
