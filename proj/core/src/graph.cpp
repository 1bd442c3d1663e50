#include "linegraph/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "linegraph/errors.hpp"

namespace linegraph {

EdgeId EdgeId::of(Vertex a, Vertex b) {
  if (a == b) throw InvalidInput("self-loop at vertex " + std::to_string(a));
  return a < b ? EdgeId{a, b} : EdgeId{b, a};
}

std::optional<Vertex> EdgeId::shared_endpoint(const EdgeId& e) const noexcept {
  if (*this == e) return std::nullopt;
  if (e.touches(u)) return u;
  if (e.touches(v)) return v;
  return std::nullopt;
}

VertexSet::VertexSet(std::initializer_list<Vertex> members) : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::range(std::size_t n) {
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), Vertex{0});
  return VertexSet(std::move(all));
}

bool VertexSet::contains(Vertex x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

Graph::Graph(std::size_t order) : adjacency_(order) {}

Graph::Graph(std::size_t order, std::span<const EdgeId> edges) : adjacency_(order) {
  build(std::vector<EdgeId>(edges.begin(), edges.end()));
}

Graph::Graph(std::size_t order, std::initializer_list<std::pair<Vertex, Vertex>> edges)
    : adjacency_(order) {
  std::vector<EdgeId> list;
  list.reserve(edges.size());
  for (auto [a, b] : edges) list.push_back(EdgeId::of(a, b));
  build(std::move(list));
}

void Graph::build(std::vector<EdgeId> edges) {
  for (auto& e : edges) {
    if (e.u == e.v) throw InvalidInput("self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.v >= adjacency_.size())
      throw InvalidInput("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                         " out of range for order " + std::to_string(adjacency_.size()));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (const auto& e : edges) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
  edges_ = std::move(edges);
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  if (a >= order() || b >= order()) return false;
  const auto& row = adjacency_[a].size() <= adjacency_[b].size() ? adjacency_[a] : adjacency_[b];
  Vertex target = &row == &adjacency_[a] ? b : a;
  return std::binary_search(row.begin(), row.end(), target);
}

std::optional<std::size_t> Graph::edge_index(const EdgeId& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::optional<std::size_t> Graph::edge_index(Vertex a, Vertex b) const {
  if (a == b) return std::nullopt;
  return edge_index(a < b ? EdgeId{a, b} : EdgeId{b, a});
}

namespace {

void check_subset(const Graph& g, const VertexSet& subset) {
  if (!subset.empty() && subset.members().back() >= g.order())
    throw InvalidInput("vertex " + std::to_string(subset.members().back()) +
                       " out of range for order " + std::to_string(g.order()));
}

}  // namespace

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& subset) {
  check_subset(g, subset);
  const auto& members = subset.members();
  std::vector<EdgeId> edges;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (Vertex y : g.neighbors(members[i])) {
      if (y <= members[i]) continue;
      auto it = std::lower_bound(members.begin(), members.end(), y);
      if (it != members.end() && *it == y)
        edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(it - members.begin())});
    }
  return {Graph(subset.size(), edges), subset.members()};
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<bool> seen(g.order(), false);
  std::vector<VertexSet> components;
  std::vector<Vertex> stack;
  for (Vertex start = 0; start < g.order(); ++start) {
    if (seen[start]) continue;
    std::vector<Vertex> members;
    stack.push_back(start);
    seen[start] = true;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      members.push_back(x);
      for (Vertex y : g.neighbors(x))
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
    }
    components.emplace_back(std::move(members));
  }
  return components;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_clique(const Graph& g, const VertexSet& subset) {
  check_subset(g, subset);
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (std::size_t j = i + 1; j < subset.size(); ++j)
      if (!g.adjacent(subset[i], subset[j])) return false;
  return true;
}

LineGraph line_graph(const Graph& g) {
  // Edges at a common vertex form a clique in L(G); every adjacency arises this way.
  std::vector<EdgeId> adjacencies;
  for (Vertex x = 0; x < g.order(); ++x) {
    auto nbrs = g.neighbors(x);
    std::vector<Vertex> incident;
    incident.reserve(nbrs.size());
    for (Vertex y : nbrs) incident.push_back(static_cast<Vertex>(*g.edge_index(x, y)));
    for (std::size_t i = 0; i < incident.size(); ++i)
      for (std::size_t j = i + 1; j < incident.size(); ++j)
        adjacencies.push_back(EdgeId::of(incident[i], incident[j]));
  }
  return {Graph(g.size(), adjacencies), g.edges()};
}

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> degrees(g.order());
  for (Vertex x = 0; x < g.order(); ++x) degrees[x] = g.degree(x);
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  return degrees;
}

Graph relabel(const Graph& g, std::span<const Vertex> permutation) {
  if (permutation.size() != g.order()) throw InvalidInput("relabel: permutation size mismatch");
  std::vector<EdgeId> edges;
  edges.reserve(g.size());
  for (const auto& e : g.edges()) edges.push_back(EdgeId::of(permutation[e.u], permutation[e.v]));
  return Graph(g.order(), edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<EdgeId> edges = a.edges();
  auto shift = static_cast<Vertex>(a.order());
  for (const auto& e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
  return Graph(a.order() + b.order(), edges);
}

Graph complement(const Graph& g) {
  std::vector<EdgeId> edges;
  for (Vertex x = 0; x < g.order(); ++x)
    for (Vertex y = x + 1; y < g.order(); ++y)
      if (!g.adjacent(x, y)) edges.push_back({x, y});
  return Graph(g.order(), edges);
}

Graph edgeless_graph(std::size_t n) { return Graph(n); }

Graph complete_graph(std::size_t n) {
  std::vector<EdgeId> edges;
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y) edges.push_back({x, y});
  return Graph(n, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<EdgeId> edges;
  for (Vertex x = 0; x + 1 < n; ++x) edges.push_back({x, x + 1});
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidInput("cycle_graph needs at least 3 vertices");
  std::vector<EdgeId> edges;
  for (Vertex x = 0; x + 1 < n; ++x) edges.push_back({x, x + 1});
  edges.push_back({0, static_cast<Vertex>(n - 1)});
  return Graph(n, edges);
}

Graph star_graph(std::size_t leaves) {
  std::vector<EdgeId> edges;
  for (Vertex x = 1; x <= leaves; ++x) edges.push_back({0, x});
  return Graph(leaves + 1, edges);
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
  std::vector<EdgeId> edges;
  for (Vertex x = 0; x < a; ++x)
    for (Vertex y = 0; y < b; ++y) edges.push_back({x, static_cast<Vertex>(a + y)});
  return Graph(a + b, edges);
}

Graph petersen_graph() {
  // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
  std::vector<EdgeId> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back(EdgeId::of(i, (i + 1) % 5));
    edges.push_back(EdgeId::of(5 + i, 5 + (i + 2) % 5));
    edges.push_back(EdgeId::of(i, i + 5));
  }
  return Graph(10, edges);
}

}  // namespace linegraph
