#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "linegraph/graph.hpp"

namespace linegraph {

// Edge-list text: optional first line "n=<count>", then one "u v" pair per line.
// '#' starts a comment; blank lines are skipped. Without a header the order is max ID + 1.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

// graph6, bit-exact. Accepts an optional ">>graph6<<" prefix and surrounding whitespace.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

// Graphviz "graph { ... }" text.
std::string emit_dot(const Graph& g, std::string_view name = "G");

}  // namespace linegraph
