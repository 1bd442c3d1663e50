#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace linegraph {

using Vertex = std::uint32_t;

// An unordered pair of distinct vertices, stored with u < v. The derived ordering is
// the lexicographic edge order used to number line-graph vertices.
struct EdgeId {
  Vertex u = 0;
  Vertex v = 1;

  static EdgeId of(Vertex a, Vertex b);

  bool touches(Vertex x) const noexcept { return x == u || x == v; }
  Vertex other(Vertex x) const noexcept { return x == u ? v : u; }
  std::optional<Vertex> shared_endpoint(const EdgeId& e) const noexcept;

  auto operator<=>(const EdgeId&) const = default;
};

// Sorted, duplicate-free set of vertex IDs.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  explicit VertexSet(std::vector<Vertex> members);

  // {0, 1, ..., n-1}
  static VertexSet range(std::size_t n);

  const std::vector<Vertex>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Vertex x) const;
  Vertex operator[](std::size_t i) const { return members_[i]; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  auto operator<=>(const VertexSet&) const = default;

 private:
  std::vector<Vertex> members_;
};

// Finite simple undirected graph on vertices 0..order()-1. Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t order);
  // Duplicate edges collapse; a self-loop or out-of-range endpoint throws InvalidInput.
  Graph(std::size_t order, std::span<const EdgeId> edges);
  Graph(std::size_t order, std::initializer_list<std::pair<Vertex, Vertex>> edges);

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }

  bool adjacent(Vertex a, Vertex b) const;
  std::span<const Vertex> neighbors(Vertex x) const { return adjacency_.at(x); }
  std::size_t degree(Vertex x) const { return adjacency_.at(x).size(); }

  // Edges in lexicographic order; position i is the edge's index.
  const std::vector<EdgeId>& edges() const noexcept { return edges_; }
  const EdgeId& edge(std::size_t index) const { return edges_.at(index); }
  std::optional<std::size_t> edge_index(const EdgeId& e) const;
  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;

  bool operator==(const Graph& other) const { return adjacency_ == other.adjacency_; }

 private:
  void build(std::vector<EdgeId> edges);

  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<EdgeId> edges_;
};

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;  // new vertex i was original[i]
};

// G[U] relabelled 0..|U|-1 in ascending original-ID order.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& subset);

// Components ordered by their minimum vertex.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

bool is_clique(const Graph& g, const VertexSet& subset);

struct LineGraph {
  Graph graph;
  std::vector<EdgeId> root_edge;  // vertex i of graph is root_edge[i] == g.edge(i)
};

LineGraph line_graph(const Graph& g);

std::vector<std::size_t> degree_sequence(const Graph& g);  // non-increasing

// Relabel so that old vertex x becomes permutation[x].
Graph relabel(const Graph& g, std::span<const Vertex> permutation);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph complement(const Graph& g);

Graph edgeless_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph star_graph(std::size_t leaves);  // K_{1,leaves}, center 0
Graph complete_bipartite_graph(std::size_t a, std::size_t b);
Graph petersen_graph();

}  // namespace linegraph
