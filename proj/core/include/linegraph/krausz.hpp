#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <string>
#include <vector>

#include "linegraph/graph.hpp"
#include "linegraph/limits.hpp"

namespace linegraph {

// A line graph decomposition: cliques of L whose edge sets partition E(L), with every
// non-isolated vertex in exactly two of them and every isolated vertex in exactly one.
// Stored as a sorted, duplicate-free list of sets; equality is set-of-sets equality.
class Decomposition {
 public:
  Decomposition() = default;
  explicit Decomposition(std::vector<VertexSet> sets);

  const std::vector<VertexSet>& sets() const noexcept { return sets_; }
  std::size_t size() const noexcept { return sets_.size(); }
  auto begin() const noexcept { return sets_.begin(); }
  auto end() const noexcept { return sets_.end(); }

  auto operator<=>(const Decomposition&) const = default;

 private:
  std::vector<VertexSet> sets_;
};

// Equivalence on E(L) given as a class label per edge index of L. Labels are normalized so
// that classes are numbered 0.. in order of their least edge; comparing two relations on
// the same graph compares these label vectors lexicographically.
class LineGraphRelation {
 public:
  LineGraphRelation() = default;
  explicit LineGraphRelation(std::vector<std::uint32_t> labels);

  std::size_t edge_count() const noexcept { return labels_.size(); }
  std::size_t class_count() const noexcept { return class_count_; }
  std::uint32_t class_of(std::size_t edge_index) const { return labels_.at(edge_index); }
  const std::vector<std::uint32_t>& labels() const noexcept { return labels_; }
  bool related(std::size_t e, std::size_t f) const { return labels_.at(e) == labels_.at(f); }

  // Edge indices of each class, classes in label order, indices ascending.
  std::vector<std::vector<std::size_t>> classes() const;

  auto operator<=>(const LineGraphRelation&) const = default;

 private:
  std::vector<std::uint32_t> labels_;
  std::size_t class_count_ = 0;
};

enum class ViolationKind {
  not_clique,
  edge_overlap,
  edge_uncovered,
  vertex_cardinality,
  not_equivalence,
  too_many_classes_at_vertex,
};

std::string to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<VertexSet> sets;  // offending sets, or the vertex span of an offending class
  std::vector<EdgeId> edges;    // offending edges; for not_clique a non-adjacent pair
  std::optional<Vertex> vertex;

  std::string describe() const;
};

// Thrown by operations whose precondition is a valid decomposition or relation.
class InvalidStructure : public std::runtime_error {
 public:
  explicit InvalidStructure(Violation violation)
      : std::runtime_error("invalid structure: " + violation.describe()), violation_(std::move(violation)) {}
  const Violation& violation() const noexcept { return violation_; }

 private:
  Violation violation_;
};

// Checks, in order: every set is a clique; no edge lies in two sets; every edge lies in
// some set; vertex membership counts (two, or one for isolated vertices). Returns the first
// failure. Empty sets or out-of-range vertices throw InvalidInput.
std::optional<Violation> validate_decomposition(const Graph& l, const Decomposition& d);

// Classes must be the full edge sets of cliques, and every vertex may meet at most two
// classes. Throws InvalidInput when the label vector does not cover E(L).
std::optional<Violation> validate_relation(const Graph& l, const LineGraphRelation& r);

// The same characterization stated on an arbitrary binary relation over edge indices:
// an equivalence, whose classes are clique edge sets, with at most two classes per vertex.
using EdgePairPredicate = std::function<bool(std::size_t, std::size_t)>;
std::optional<Violation> validate_edge_relation(const Graph& l, const EdgePairPredicate& related);
LineGraphRelation relation_from_pairs(const Graph& l, const EdgePairPredicate& related);

LineGraphRelation relation_of(const Graph& l, const Decomposition& d);
Decomposition decomposition_of(const Graph& l, const LineGraphRelation& r);

struct RestrictedRelation {
  InducedSubgraph subgraph;
  LineGraphRelation relation;
};

// R intersected with E(L[U])^2, relabelled onto L[U].
RestrictedRelation restrict_relation(const Graph& l, const LineGraphRelation& r, const VertexSet& subset);

// Every decomposition of L, sorted; empty iff L is not a line graph.
// Refuses above limits.enumeration_cap vertices.
std::vector<Decomposition> enumerate_decompositions(const Graph& l, const Limits& limits = {});

// Every valid relation of L, in the same order as the decompositions they come from.
std::vector<LineGraphRelation> enumerate_relations(const Graph& l, const Limits& limits = {});

bool is_singular(const Graph& l);
std::vector<VertexSet> singular_components(const Graph& l);

// e * f: some clique of L contains both edges.
bool star_related(const Graph& l, const EdgeId& e, const EdgeId& f);
bool star_contains(const Graph& l, const LineGraphRelation& r);

// Connected, finite, at least 7 vertices: such induced subgraphs of a line graph are
// nonsingular and so carry a unique relation.
bool is_nice(const Graph& l, const VertexSet& subset);

// Text form: one set (or class) per line. Decomposition lines are space-separated vertex
// IDs; relation lines are space-separated "u-v" edges.
std::string format_decomposition(const Decomposition& d);
Decomposition parse_decomposition(std::string_view text);
std::string format_relation(const Graph& l, const LineGraphRelation& r);
LineGraphRelation parse_relation(const Graph& l, std::string_view text);

}  // namespace linegraph
