#include "linegraph/canonical.hpp"

#include <algorithm>

#include "krausz_search.hpp"
#include "linegraph/errors.hpp"

namespace linegraph {

ComponentRanking::ComponentRanking(const Graph& l)
    : graph_(&l), components_(connected_components(l)), component_(l.order()), rank_(l.order()) {
  for (std::size_t c = 0; c < components_.size(); ++c)
    for (std::size_t i = 0; i < components_[c].size(); ++i) {
      component_[components_[c][i]] = c;
      rank_[components_[c][i]] = i + 1;
    }
}

std::optional<Vertex> ComponentRanking::nth(std::size_t k, Vertex x) const {
  const auto& members = components_[component_.at(x)];
  if (k == 0 || k > members.size()) return std::nullopt;
  return members[k - 1];
}

Graph ComponentRanking::canonical_form(Vertex x) const {
  // Members are stored ascending, so induced_subgraph's relabelling is exactly rank - 1.
  return induced_subgraph(*graph_, components_[component_.at(x)]).graph;
}

LineGraphRelation least_relation(const Graph& gamma, const Limits& limits) {
  if (gamma.order() > limits.krausz_component_cap)
    throw CapExceeded("canonical_relation", gamma.order(), limits.krausz_component_cap);
  auto decompositions = detail::connected_decompositions(gamma);
  if (decompositions.empty()) throw NotLineGraph("component is not a line graph");
  std::optional<LineGraphRelation> best;
  for (const auto& d : decompositions) {
    auto r = relation_of(gamma, d);
    if (!best || r < *best) best = std::move(r);
  }
  return *best;
}

LineGraphRelation canonical_relation(const Graph& l, const RelationLookup& lookup, const Limits& limits) {
  ComponentRanking ranking(l);
  std::vector<std::uint32_t> labels(l.size(), 0);
  std::uint32_t offset = 0;
  for (const auto& members : ranking.components()) {
    const Graph gamma = ranking.canonical_form(members[0]);
    if (gamma.order() > limits.krausz_component_cap)
      throw CapExceeded("canonical_relation", gamma.order(), limits.krausz_component_cap);
    LineGraphRelation copied;
    try {
      copied = lookup(gamma);
    } catch (const NotLineGraph&) {
      throw NotLineGraph("component containing vertex " + std::to_string(members[0]) + " (" +
                         std::to_string(members.size()) + " vertices) is not a line graph");
    }
    // Edge {i, j} of gamma is {n_{i+1}(x), n_{j+1}(x)} in L.
    for (std::size_t j = 0; j < gamma.size(); ++j) {
      const auto& e = gamma.edge(j);
      labels[*l.edge_index(members[e.u], members[e.v])] = offset + copied.class_of(j);
    }
    offset += static_cast<std::uint32_t>(copied.class_count());
  }
  return LineGraphRelation(std::move(labels));
}

LineGraphRelation canonical_relation(const Graph& l, const Limits& limits) {
  LocalRelationMemo memo;
  return canonical_relation(l, memo, limits);
}

}  // namespace linegraph
