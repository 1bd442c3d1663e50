#pragma once

#include <cstddef>

namespace linegraph {

// Size caps for the exponential searches. Exceeding one raises CapExceeded.
struct Limits {
  std::size_t isomorphism_cap = 12;      // all_isomorphisms: max vertex count
  std::size_t krausz_component_cap = 24; // is_line_graph_krausz: max component order
  std::size_t enumeration_cap = 16;      // enumerate_decompositions: max vertex count
  std::size_t k0_length_cap = 16;        // k0_truncation: max string length m
  std::size_t coloring_cap = 2048;       // chromatic_number_exact default cap

  // Every cap set to the same value.
  static Limits uniform(std::size_t cap);

  // Defaults, overridden by LINEGRAPH_CAP (a single integer applied to every cap) when set.
  static Limits from_environment();
};

}  // namespace linegraph
