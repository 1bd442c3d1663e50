#include "linegraph/recognition.hpp"

#include "krausz_search.hpp"
#include "linegraph/catalog.hpp"

namespace linegraph {

BeinekeVerdict is_line_graph_beineke(const Graph& l) {
  for (const auto& entry : beineke_graphs())
    if (auto copy = find_induced_copy(l, entry.graph))
      return {false, ForbiddenWitness{entry.index, std::move(*copy)}};
  return {true, std::nullopt};
}

std::vector<ForbiddenWitness> forbidden_witness_all(const Graph& l) {
  std::vector<ForbiddenWitness> out;
  for (const auto& entry : beineke_graphs())
    if (auto copy = find_induced_copy(l, entry.graph)) out.push_back({entry.index, std::move(*copy)});
  return out;
}

std::optional<Decomposition> is_line_graph_krausz(const Graph& l, const Limits& limits) {
  auto parts = detail::per_component_decompositions(l, limits.krausz_component_cap, "is_line_graph_krausz");
  std::vector<VertexSet> sets;
  for (const auto& options : parts) {
    if (options.empty()) return std::nullopt;
    // Components use disjoint vertices, so the per-component minima give the global minimum.
    sets.insert(sets.end(), options.front().begin(), options.front().end());
  }
  return Decomposition(std::move(sets));
}

}  // namespace linegraph
