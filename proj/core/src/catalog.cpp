#include "linegraph/catalog.hpp"

#include "linegraph/errors.hpp"

namespace linegraph {

namespace {

std::vector<CatalogEntry> make_beineke() {
  // Vertex numbering follows the order in which the vertices are placed in the usual drawing.
  std::vector<CatalogEntry> list;
  auto add = [&](std::string name, Graph g) {
    list.push_back({std::move(name), std::move(g), CatalogRole::beineke, static_cast<int>(list.size()) + 1});
  };
  add("claw", Graph(4, {{0, 1}, {0, 2}, {0, 3}}));
  add("K4- with two pendants", Graph(6, {{0, 3}, {0, 4}, {0, 5}, {3, 4}, {3, 5}, {1, 4}, {2, 5}}));
  add("K4 with a pendant path", Graph(6, {{0, 1}, {0, 2}, {0, 3}, {2, 4}, {3, 4}, {4, 5}, {1, 2}, {1, 3}, {2, 3}}));
  add("K4- plus a common neighbour", Graph(5, {{0, 2}, {0, 3}, {0, 4}, {2, 3}, {2, 4}, {1, 3}, {1, 4}}));
  add("K4- with joined pendants",
      Graph(6, {{0, 3}, {0, 4}, {0, 5}, {3, 4}, {3, 5}, {1, 4}, {1, 2}, {2, 5}}));
  add("two K4 sharing an edge",
      Graph(6, {{0, 1}, {0, 2}, {0, 3}, {2, 4}, {3, 4}, {4, 5}, {1, 2}, {1, 3}, {2, 3}, {2, 5}, {3, 5}}));
  add("wheel W5",
      Graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {2, 3}, {3, 5}, {4, 5}, {1, 4}}));
  add("four-triangle strip",
      Graph(6, {{0, 1}, {2, 3}, {4, 5}, {1, 2}, {0, 5}, {0, 2}, {0, 4}, {1, 3}, {1, 5}}));
  add("K5-", Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 4}, {2, 4}, {2, 3}, {1, 3}, {3, 4}}));
  return list;
}

Graph k4_minus() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

std::vector<CatalogEntry> make_singular() {
  return {
      {"K3", complete_graph(3), CatalogRole::singular, 1},
      {"K4-", k4_minus(), CatalogRole::singular, 2},
      {"square pyramid", Graph(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}}),
       CatalogRole::singular, 3},
      {"octahedron", complement(Graph(6, {{0, 1}, {2, 3}, {4, 5}})), CatalogRole::singular, 4},
  };
}

std::vector<CatalogEntry> make_exceptional() {
  return {
      {"K3", complete_graph(3), CatalogRole::exceptional, 1},
      {"K1,3", star_graph(3), CatalogRole::exceptional, 2},
      {"K1,3+", Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}}), CatalogRole::exceptional, 3},
      {"K4-", k4_minus(), CatalogRole::exceptional, 4},
      {"K4", complete_graph(4), CatalogRole::exceptional, 5},
  };
}

}  // namespace

const std::vector<CatalogEntry>& beineke_graphs() {
  static const std::vector<CatalogEntry> list = make_beineke();
  return list;
}

const std::vector<CatalogEntry>& singular_graphs() {
  static const std::vector<CatalogEntry> list = make_singular();
  return list;
}

const std::vector<CatalogEntry>& exceptional_graphs() {
  static const std::vector<CatalogEntry> list = make_exceptional();
  return list;
}

const CatalogEntry& exceptional_partner(std::size_t exceptional_index) {
  static constexpr std::size_t partner[] = {0, 0, 1, 2, 3};
  if (exceptional_index >= std::size(partner)) throw InvalidInput("no exceptional graph at that index");
  return singular_graphs()[partner[exceptional_index]];
}

std::vector<CatalogEntry> catalog_entries() {
  std::vector<CatalogEntry> all = beineke_graphs();
  all.insert(all.end(), singular_graphs().begin(), singular_graphs().end());
  all.insert(all.end(), exceptional_graphs().begin(), exceptional_graphs().end());
  return all;
}

std::optional<CatalogEntry> find_catalog_entry(const std::string& name) {
  for (const auto& entry : catalog_entries()) {
    const std::string tag = to_string(entry.role) + ":" + std::to_string(entry.index);
    if (entry.name == name || tag == name) return entry;
  }
  return std::nullopt;
}

std::string to_string(CatalogRole role) {
  switch (role) {
    case CatalogRole::beineke: return "beineke";
    case CatalogRole::singular: return "singular";
    case CatalogRole::exceptional: return "exceptional";
  }
  return "unknown";
}

Graph k0_truncation(std::size_t k, std::size_t m, const Limits& limits) {
  if (m > limits.k0_length_cap) throw CapExceeded("k0_truncation", m, limits.k0_length_cap);
  if (k > m) throw InvalidInput("k0_truncation: suffix start k must not exceed length m");
  const std::size_t n = std::size_t{1} << m;
  const std::size_t block = std::size_t{1} << k;
  // Agreement on positions >= k means equal high bits: each aligned block of 2^k IDs is a clique.
  std::vector<EdgeId> edges;
  edges.reserve(n / block * (block * (block - 1) / 2));
  for (std::size_t base = 0; base < n; base += block)
    for (std::size_t i = 0; i < block; ++i)
      for (std::size_t j = i + 1; j < block; ++j)
        edges.push_back({static_cast<Vertex>(base + i), static_cast<Vertex>(base + j)});
  return Graph(n, edges);
}

Graph star_forest(std::size_t components, std::size_t leaves) {
  if (leaves == 0) throw InvalidInput("star_forest: each star needs at least one leaf");
  std::vector<EdgeId> edges;
  const std::size_t stride = leaves + 1;
  for (std::size_t c = 0; c < components; ++c)
    for (std::size_t l = 1; l <= leaves; ++l)
      edges.push_back({static_cast<Vertex>(c * stride), static_cast<Vertex>(c * stride + l)});
  return Graph(components * stride, edges);
}

}  // namespace linegraph
