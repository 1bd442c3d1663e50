#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linegraph/graph.hpp"
#include "linegraph/isomorphism.hpp"

namespace linegraph {

// phi[i] is the H-edge index that G-edge i maps to.
using EdgeMap = std::vector<std::size_t>;

struct WhitneyResult {
  enum class Outcome { induced, exceptional, not_induced };
  Outcome outcome = Outcome::not_induced;
  std::optional<IsoWitness> sigma;       // induced
  std::string exceptional_name;          // exceptional, e.g. "K3/K1,3" or "K4"
  std::optional<EdgeId> counterexample;  // not_induced: a G-edge sigma cannot match
};

std::string to_string(WhitneyResult::Outcome outcome);

// Whether phi is a bijection E(G) -> E(H) preserving "shares an endpoint" both ways.
bool is_line_graph_isomorphism(const Graph& g, const Graph& h, const EdgeMap& phi);

// Looks for sigma: V(G) -> V(H) with phi(xy) = sigma(x)sigma(y). A vertex of degree >= 2
// must go to the common endpoint of the images of its edges, so sigma is forced (up to
// the K2 swap) and then checked edge by edge. Without a sigma the result is exceptional
// when G or H is an exceptional graph, not_induced otherwise.
// Throws InvalidInput on disconnected or empty graphs or when phi is not a line-graph isomorphism.
WhitneyResult whitney_lift(const Graph& g, const Graph& h, const EdgeMap& phi);

// Exceptional catalog name of g, if any.
std::optional<std::string> exceptional_name(const Graph& g);

}  // namespace linegraph
