#pragma once

#include <cstddef>
#include <vector>

#include "linegraph/graph.hpp"
#include "linegraph/krausz.hpp"

namespace linegraph::detail {

// All decompositions of a connected graph (vertices 0..n-1), sorted.
std::vector<Decomposition> connected_decompositions(const Graph& component);

// Decompositions of each component, lifted back to the IDs of l. Components in
// connected_components order; throws CapExceeded when one exceeds component_cap.
std::vector<std::vector<Decomposition>> per_component_decompositions(const Graph& l,
                                                                     std::size_t component_cap,
                                                                     const char* operation);

}  // namespace linegraph::detail
