#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linegraph/graph.hpp"
#include "linegraph/limits.hpp"

namespace linegraph {

enum class CatalogRole { beineke, singular, exceptional };

struct CatalogEntry {
  std::string name;
  Graph graph;
  CatalogRole role;
  int index = 0;  // 1..9 for beineke entries, position in its list otherwise
};

// The nine minimal non-line graphs of Beineke, numbered 1..9 by reading the usual 3x3 drawing row by row:
//   1 claw K1,3                          2 K4- with a pendant at each degree-2 vertex
//   3 K4 plus a degree-2 vertex with a pendant
//   4 K4- plus a vertex joined to both degree-2 vertices
//   5 entry 2 with its two pendants joined  6 two K4 sharing an edge
//   7 wheel W5                           8 strip of four triangles (2x3 grid with diagonals)
//   9 K5 minus an edge
// The same encodings ship as graph6 in core/data/catalog.txt.
const std::vector<CatalogEntry>& beineke_graphs();

// K3, K4-, square pyramid, octahedron.
const std::vector<CatalogEntry>& singular_graphs();

// K3, K1,3, K1,3+, K4-, K4, each with line graph isomorphic to exceptional_partner(i).
const std::vector<CatalogEntry>& exceptional_graphs();

// Singular graph paired with exceptional entry i (0-based) by the Whitney exception table.
const CatalogEntry& exceptional_partner(std::size_t exceptional_index);

// Every entry of the three lists, in beineke, singular, exceptional order.
std::vector<CatalogEntry> catalog_entries();
std::optional<CatalogEntry> find_catalog_entry(const std::string& name);

std::string to_string(CatalogRole role);

// Vertices are the binary strings of length m (vertex v: bit i of v is position i); two
// strings are adjacent iff they agree on every position >= k. This gives 2^(m-k) disjoint
// cliques of size 2^k. Refuses when m exceeds limits.k0_length_cap.
Graph k0_truncation(std::size_t k, std::size_t m, const Limits& limits = {});

// `components` disjoint copies of K_{1,leaves}; copy c has center c*(leaves+1).
Graph star_forest(std::size_t components, std::size_t leaves);

}  // namespace linegraph
