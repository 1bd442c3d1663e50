#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "linegraph/graph.hpp"
#include "linegraph/limits.hpp"

namespace linegraph {

// Vertex bijection V(G) -> V(H) preserving adjacency and non-adjacency.
struct IsoWitness {
  std::vector<Vertex> mapping;

  Vertex operator()(Vertex x) const { return mapping.at(x); }
  bool operator==(const IsoWitness&) const = default;
  auto operator<=>(const IsoWitness&) const = default;
};

// Injective map V(pattern) -> V(host) whose image induces a copy of the pattern.
using Embedding = std::vector<Vertex>;

bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<Vertex>& mapping);
bool is_induced_embedding(const Graph& host, const Graph& pattern, const Embedding& embedding);

// Exhaustive backtracking, so nullopt proves there is no induced copy.
std::optional<Embedding> find_induced_copy(const Graph& host, const Graph& pattern);

// Calls visit for every induced embedding of pattern into host until it returns false.
void for_each_induced_copy(const Graph& host, const Graph& pattern,
                           const std::function<bool(const Embedding&)>& visit);

std::optional<IsoWitness> is_isomorphic(const Graph& g, const Graph& h);

// Every isomorphism G -> H, sorted by mapping. Refuses (CapExceeded) above limits.isomorphism_cap.
std::vector<IsoWitness> all_isomorphisms(const Graph& g, const Graph& h, const Limits& limits = {});

}  // namespace linegraph
