#pragma once

#include <optional>
#include <vector>

#include "linegraph/graph.hpp"
#include "linegraph/isomorphism.hpp"
#include "linegraph/krausz.hpp"
#include "linegraph/limits.hpp"

namespace linegraph {

// An induced copy of Beineke graph `beineke_index` (1..9): embedding[i] is the host vertex
// playing catalog vertex i.
struct ForbiddenWitness {
  int beineke_index = 0;
  Embedding embedding;

  bool operator==(const ForbiddenWitness&) const = default;
};

struct BeinekeVerdict {
  bool is_line_graph = false;
  std::optional<ForbiddenWitness> witness;  // smallest index found, when not a line graph

  explicit operator bool() const noexcept { return is_line_graph; }
};

// Line graph iff no induced copy of any of the nine Beineke graphs.
BeinekeVerdict is_line_graph_beineke(const Graph& l);

// One witness per Beineke index that embeds, ascending; empty iff l is a line graph.
std::vector<ForbiddenWitness> forbidden_witness_all(const Graph& l);

// The lexicographically least decomposition, or nullopt when none exists. Components are
// searched independently; a component above limits.krausz_component_cap is refused.
std::optional<Decomposition> is_line_graph_krausz(const Graph& l, const Limits& limits = {});

}  // namespace linegraph
