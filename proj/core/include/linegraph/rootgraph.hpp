#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linegraph/graph.hpp"
#include "linegraph/krausz.hpp"
#include "linegraph/limits.hpp"
#include "linegraph/recognition.hpp"

namespace linegraph {

// How a vertex of L sits in a relation: no class (V0), one class (V1), two classes (V2).
enum class VertexRole { none = 0, one = 1, two = 2 };

// Where a root vertex came from.
struct RootVertex {
  enum class Kind {
    clique,        // decomposition route: set `index` of the decomposition
    auxiliary,     // decomposition route: extra endpoint for isolated L-vertex `index`
    line_vertex,   // relation route: V1 vertex `index` of L
    label,         // relation route: class label `index` (extra labels follow the classes)
    isolated_copy  // relation route: (copy, index) for V0 vertex `index`, copy in {0, 1}
  };
  Kind kind;
  std::uint32_t index = 0;
  std::uint32_t copy = 0;

  bool operator==(const RootVertex&) const = default;
};

std::string to_string(const RootVertex& v);

// A root graph G with phi: E(G) -> V(L) (phi[i] is the L-vertex of root edge i).
struct RootWitness {
  Graph root;
  std::vector<Vertex> phi;
  std::vector<VertexRole> roles;  // per vertex of L
  std::vector<RootVertex> origin; // per vertex of root
};

// phi is a bijection E(root) -> V(L) and an isomorphism L(root) -> L.
bool phi_is_isomorphism(const RootWitness& w, const Graph& l);

// Vertices are the sets of D (in D's order); two sets are adjacent iff they meet, and the
// edge maps to their common vertex. Each isolated vertex of L also gets an auxiliary root
// vertex joined to its singleton; auxiliaries are numbered after the sets.
RootWitness root_from_decomposition(const Graph& l, const Decomposition& d);

// An extra (vertex, label) incidence whose label is not a class of the relation. Each
// extra label may touch one vertex, and a vertex may meet at most two labels in total.
struct AuxiliaryIncidence {
  Vertex vertex;
  std::uint32_t label;
};

// Root built from the vertex-label incidence of R (plus any auxiliary incidences):
// V(G) = V1 + labels + {0,1} x V0, with edges (0,v)(1,v) for v in V0, v--x for v in V1
// meeting label x, and x--y for the two labels of a V2 vertex. Root vertices are numbered
// V1 vertices first, then labels (classes, then extra labels ascending), then V0 pairs.
RootWitness root_from_relation(const Graph& l, const LineGraphRelation& r,
                               const std::vector<AuxiliaryIncidence>& auxiliary = {});

struct RoundtripReport {
  bool line_graph = false;
  std::optional<Decomposition> decomposition;
  std::optional<RootWitness> root;
  bool roundtrip_isomorphic = false;
  std::optional<ForbiddenWitness> witness;
  std::string error;  // set when a cap refused the computation
};

RoundtripReport verify_roundtrip(const Graph& l, const Limits& limits = {});

// Exact chromatic number by DSATUR branch and bound, per component. Refuses above cap.
std::size_t chromatic_number_exact(const Graph& g, std::size_t cap);

}  // namespace linegraph
