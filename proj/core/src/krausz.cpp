#include "linegraph/krausz.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <unordered_set>

#include "krausz_search.hpp"
#include "linegraph/catalog.hpp"
#include "linegraph/errors.hpp"
#include "linegraph/isomorphism.hpp"

namespace linegraph {

Decomposition::Decomposition(std::vector<VertexSet> sets) : sets_(std::move(sets)) {
  std::sort(sets_.begin(), sets_.end());
  sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

LineGraphRelation::LineGraphRelation(std::vector<std::uint32_t> labels) : labels_(std::move(labels)) {
  std::map<std::uint32_t, std::uint32_t> renumber;
  for (auto& label : labels_) {
    auto [it, fresh] = renumber.try_emplace(label, static_cast<std::uint32_t>(renumber.size()));
    label = it->second;
  }
  class_count_ = renumber.size();
}

std::vector<std::vector<std::size_t>> LineGraphRelation::classes() const {
  std::vector<std::vector<std::size_t>> out(class_count_);
  for (std::size_t e = 0; e < labels_.size(); ++e) out[labels_[e]].push_back(e);
  return out;
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::not_clique: return "not_clique";
    case ViolationKind::edge_overlap: return "edge_overlap";
    case ViolationKind::edge_uncovered: return "edge_uncovered";
    case ViolationKind::vertex_cardinality: return "vertex_cardinality";
    case ViolationKind::not_equivalence: return "not_equivalence";
    case ViolationKind::too_many_classes_at_vertex: return "too_many_classes_at_vertex";
  }
  return "unknown";
}

std::string Violation::describe() const {
  std::ostringstream out;
  out << to_string(kind);
  for (const auto& s : sets) {
    out << " {";
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
    out << "}";
  }
  for (const auto& e : edges) out << " " << e.u << "-" << e.v;
  if (vertex) out << " at " << *vertex;
  return out.str();
}

namespace detail {

namespace {

class KrauszSearch {
 public:
  explicit KrauszSearch(const Graph& g)
      : g_(g),
        counts_(g.order(), 0),
        open_degree_(g.order()),
        covered_((g.size() + 63) / 64, 0),
        memo_enabled_(g.size() <= kMemoEdgeLimit) {
    for (Vertex x = 0; x < g.order(); ++x) {
      order_.push_back(x);
      open_degree_[x] = g.degree(x);
    }
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  }

  std::vector<Decomposition> run() {
    search(0);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  static constexpr std::size_t kMemoEdgeLimit = 4096;

  bool is_covered(std::size_t e) const { return (covered_[e / 64] >> (e % 64)) & 1u; }
  void flip(std::size_t e) { covered_[e / 64] ^= std::uint64_t{1} << (e % 64); }

  std::string state_key() const {
    std::string key(reinterpret_cast<const char*>(covered_.data()), covered_.size() * sizeof(std::uint64_t));
    key.append(counts_.begin(), counts_.end());
    return key;
  }

  // Adds a set if it is a clique of uncovered edges over unsaturated vertices.
  bool push(const std::vector<Vertex>& set) {
    for (Vertex x : set)
      if (counts_[x] >= 2) return false;
    std::vector<std::size_t> edges;
    edges.reserve(set.size() * (set.size() - 1) / 2);
    for (std::size_t i = 0; i < set.size(); ++i)
      for (std::size_t j = i + 1; j < set.size(); ++j) {
        auto e = g_.edge_index(set[i], set[j]);
        if (!e || is_covered(*e)) return false;
        edges.push_back(*e);
      }
    for (auto e : edges) {
      flip(e);
      --open_degree_[g_.edge(e).u];
      --open_degree_[g_.edge(e).v];
    }
    for (Vertex x : set) ++counts_[x];
    chosen_.push_back(set);
    return true;
  }

  void pop() {
    const auto& set = chosen_.back();
    for (std::size_t i = 0; i < set.size(); ++i)
      for (std::size_t j = i + 1; j < set.size(); ++j) {
        auto e = *g_.edge_index(set[i], set[j]);
        flip(e);
        ++open_degree_[g_.edge(e).u];
        ++open_degree_[g_.edge(e).v];
      }
    for (Vertex x : set) --counts_[x];
    chosen_.pop_back();
  }

  // A vertex already in two sets can never cover another edge.
  bool saturation_ok(const std::vector<Vertex>& set) const {
    for (Vertex x : set)
      if (counts_[x] == 2 && open_degree_[x] != 0) return false;
    return true;
  }

  void emit() {
    std::vector<VertexSet> sets;
    sets.reserve(chosen_.size() + g_.order());
    for (const auto& s : chosen_) sets.emplace_back(s);
    // Vertices in fewer than two sets get their forced singleton.
    for (Vertex x = 0; x < g_.order(); ++x)
      if (counts_[x] < 2) sets.push_back(VertexSet{x});
    found_.emplace_back(std::move(sets));
  }

  bool search(std::size_t start) {
    std::size_t i = start;
    while (i < order_.size() && open_degree_[order_[i]] == 0) ++i;
    if (i == order_.size()) {
      emit();
      return true;
    }
    std::string key;
    if (memo_enabled_) {
      key = state_key();
      if (dead_.contains(key)) return false;
    }

    const Vertex v = order_[i];
    std::vector<Vertex> open;
    for (Vertex y : g_.neighbors(v))
      if (!is_covered(*g_.edge_index(v, y))) open.push_back(y);

    bool any = false;
    if (counts_[v] == 1) {
      std::vector<Vertex> set = open;
      set.push_back(v);
      std::sort(set.begin(), set.end());
      if (push(set)) {
        if (saturation_ok(set)) any |= search(i + 1);
        pop();
      }
    } else if (counts_[v] == 0) {
      std::vector<int> side(open.size(), -1);
      std::vector<int> cross(open.size(), 0);
      any = split(v, open, side, cross, 0, i);
    }
    if (!any && memo_enabled_) dead_.insert(std::move(key));
    return any;
  }

  // Splits the open neighbourhood of an untouched vertex v into the two cliques it will
  // lie in. Each side must be a clique, and a vertex may have at most one neighbour on
  // the other side (two would put an edge of one side into a second set).
  bool split(Vertex v, const std::vector<Vertex>& open, std::vector<int>& side, std::vector<int>& cross,
             std::size_t j, std::size_t position) {
    if (j == open.size()) return apply_split(v, open, side, position);
    bool any = false;
    for (int s = 0; s < 2; ++s) {
      if (j == 0 && s == 1) break;  // first neighbour fixes side 0
      bool ok = true;
      std::vector<std::size_t> bumped;
      for (std::size_t t = 0; t < j && ok; ++t) {
        const bool adj = g_.adjacent(open[t], open[j]);
        if (side[t] == s) {
          ok = adj;
        } else if (adj) {
          if (cross[t] >= 1) ok = false;
          else bumped.push_back(t);
        }
      }
      if (!ok || bumped.size() > 1) continue;
      side[j] = s;
      cross[j] = static_cast<int>(bumped.size());
      for (auto t : bumped) ++cross[t];
      any |= split(v, open, side, cross, j + 1, position);
      for (auto t : bumped) --cross[t];
      side[j] = -1;
      cross[j] = 0;
    }
    return any;
  }

  bool apply_split(Vertex v, const std::vector<Vertex>& open, const std::vector<int>& side,
                   std::size_t position) {
    std::vector<Vertex> first{v}, second{v};
    for (std::size_t t = 0; t < open.size(); ++t) (side[t] == 0 ? first : second).push_back(open[t]);
    std::sort(first.begin(), first.end());
    std::sort(second.begin(), second.end());
    bool any = false;
    if (!push(first)) return false;
    if (second.size() == 1) {
      if (saturation_ok(first)) any = search(position + 1);
    } else if (push(second)) {
      if (saturation_ok(first) && saturation_ok(second)) any = search(position + 1);
      pop();
    }
    pop();
    return any;
  }

  const Graph& g_;
  std::vector<Vertex> order_;
  std::vector<char> counts_;
  std::vector<std::size_t> open_degree_;
  std::vector<std::uint64_t> covered_;
  std::vector<std::vector<Vertex>> chosen_;
  std::vector<Decomposition> found_;
  std::unordered_set<std::string> dead_;
  bool memo_enabled_;
};

}  // namespace

std::vector<Decomposition> connected_decompositions(const Graph& component) {
  return KrauszSearch(component).run();
}

std::vector<std::vector<Decomposition>> per_component_decompositions(const Graph& l,
                                                                     std::size_t component_cap,
                                                                     const char* operation) {
  auto components = connected_components(l);
  for (const auto& c : components)
    if (c.size() > component_cap) throw CapExceeded(operation, c.size(), component_cap);
  std::vector<std::vector<Decomposition>> out;
  out.reserve(components.size());
  for (const auto& c : components) {
    auto sub = induced_subgraph(l, c);
    std::vector<Decomposition> lifted;
    for (const auto& local : connected_decompositions(sub.graph)) {
      std::vector<VertexSet> sets;
      sets.reserve(local.size());
      for (const auto& s : local) {
        std::vector<Vertex> members;
        members.reserve(s.size());
        for (Vertex x : s) members.push_back(sub.original[x]);
        sets.emplace_back(std::move(members));
      }
      lifted.emplace_back(std::move(sets));
    }
    out.push_back(std::move(lifted));
  }
  return out;
}

}  // namespace detail

namespace {

void check_sets(const Graph& l, const Decomposition& d) {
  for (const auto& s : d) {
    if (s.empty()) throw InvalidInput("decomposition contains an empty set");
    if (s.members().back() >= l.order())
      throw InvalidInput("decomposition references vertex " + std::to_string(s.members().back()) +
                         " outside a graph of order " + std::to_string(l.order()));
  }
}

void check_labels(const Graph& l, const LineGraphRelation& r) {
  if (r.edge_count() != l.size())
    throw InvalidInput("relation labels " + std::to_string(r.edge_count()) + " edges, graph has " +
                       std::to_string(l.size()));
}

}  // namespace

std::optional<Violation> validate_decomposition(const Graph& l, const Decomposition& d) {
  check_sets(l, d);
  for (const auto& s : d)
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        if (!l.adjacent(s[i], s[j]))
          return Violation{ViolationKind::not_clique, {s}, {EdgeId{s[i], s[j]}}, std::nullopt};

  std::vector<std::optional<std::size_t>> owner(l.size());
  for (std::size_t k = 0; k < d.size(); ++k) {
    const auto& s = d.sets()[k];
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        auto e = *l.edge_index(s[i], s[j]);
        if (owner[e])
          return Violation{ViolationKind::edge_overlap, {d.sets()[*owner[e]], s}, {l.edge(e)}, std::nullopt};
        owner[e] = k;
      }
  }
  for (std::size_t e = 0; e < l.size(); ++e)
    if (!owner[e]) return Violation{ViolationKind::edge_uncovered, {}, {l.edge(e)}, std::nullopt};

  std::vector<std::size_t> membership(l.order(), 0);
  for (const auto& s : d)
    for (Vertex x : s) ++membership[x];
  for (Vertex x = 0; x < l.order(); ++x) {
    const std::size_t want = l.degree(x) == 0 ? 1 : 2;
    if (membership[x] != want) {
      std::vector<VertexSet> holding;
      for (const auto& s : d)
        if (s.contains(x)) holding.push_back(s);
      return Violation{ViolationKind::vertex_cardinality, std::move(holding), {}, x};
    }
  }
  return std::nullopt;
}

std::optional<Violation> validate_relation(const Graph& l, const LineGraphRelation& r) {
  check_labels(l, r);
  const auto classes = r.classes();
  for (std::size_t c = 0; c < classes.size(); ++c) {
    std::vector<Vertex> span;
    for (auto e : classes[c]) {
      span.push_back(l.edge(e).u);
      span.push_back(l.edge(e).v);
    }
    VertexSet vertices(std::move(span));
    for (std::size_t i = 0; i < vertices.size(); ++i)
      for (std::size_t j = i + 1; j < vertices.size(); ++j) {
        auto e = l.edge_index(vertices[i], vertices[j]);
        if (!e) return Violation{ViolationKind::not_clique, {vertices}, {EdgeId{vertices[i], vertices[j]}}, std::nullopt};
        // The class must be the whole edge set of the clique it spans.
        if (r.class_of(*e) != c) return Violation{ViolationKind::not_clique, {vertices}, {l.edge(*e)}, std::nullopt};
      }
  }
  for (Vertex x = 0; x < l.order(); ++x) {
    std::vector<std::uint32_t> seen;
    std::vector<EdgeId> witnesses;
    for (Vertex y : l.neighbors(x)) {
      auto e = *l.edge_index(x, y);
      if (std::find(seen.begin(), seen.end(), r.class_of(e)) == seen.end()) {
        seen.push_back(r.class_of(e));
        witnesses.push_back(l.edge(e));
      }
    }
    if (seen.size() > 2) return Violation{ViolationKind::too_many_classes_at_vertex, {}, witnesses, x};
  }
  return std::nullopt;
}

std::optional<Violation> validate_edge_relation(const Graph& l, const EdgePairPredicate& related) {
  const std::size_t m = l.size();
  // (1) equivalence
  for (std::size_t e = 0; e < m; ++e)
    if (!related(e, e)) return Violation{ViolationKind::not_equivalence, {}, {l.edge(e)}, std::nullopt};
  for (std::size_t e = 0; e < m; ++e)
    for (std::size_t f = 0; f < m; ++f)
      if (related(e, f) && !related(f, e))
        return Violation{ViolationKind::not_equivalence, {}, {l.edge(e), l.edge(f)}, std::nullopt};
  for (std::size_t e = 0; e < m; ++e)
    for (std::size_t f = 0; f < m; ++f) {
      if (!related(e, f)) continue;
      for (std::size_t g = 0; g < m; ++g)
        if (related(f, g) && !related(e, g))
          return Violation{ViolationKind::not_equivalence, {}, {l.edge(e), l.edge(f), l.edge(g)}, std::nullopt};
    }
  // (2) e = ab related to f = cd forces a = c or (ac an edge related to e), for every
  // choice of endpoint names.
  for (std::size_t e = 0; e < m; ++e)
    for (std::size_t f = 0; f < m; ++f) {
      if (!related(e, f)) continue;
      for (Vertex a : {l.edge(e).u, l.edge(e).v})
        for (Vertex c : {l.edge(f).u, l.edge(f).v}) {
          if (a == c) continue;
          auto ac = l.edge_index(a, c);
          if (!ac || !related(*ac, e))
            return Violation{ViolationKind::not_clique, {}, {l.edge(e), l.edge(f)}, std::nullopt};
        }
    }
  // (3) no vertex meets three pairwise unrelated edges.
  for (Vertex y = 0; y < l.order(); ++y) {
    std::vector<std::size_t> at;
    for (Vertex z : l.neighbors(y)) at.push_back(*l.edge_index(y, z));
    for (std::size_t i = 0; i < at.size(); ++i)
      for (std::size_t j = i + 1; j < at.size(); ++j) {
        if (related(at[i], at[j])) continue;
        for (std::size_t k = j + 1; k < at.size(); ++k)
          if (!related(at[i], at[k]) && !related(at[j], at[k]))
            return Violation{ViolationKind::too_many_classes_at_vertex, {},
                             {l.edge(at[i]), l.edge(at[j]), l.edge(at[k])}, y};
      }
  }
  return std::nullopt;
}

LineGraphRelation relation_from_pairs(const Graph& l, const EdgePairPredicate& related) {
  if (auto v = validate_edge_relation(l, related)) throw InvalidStructure(*v);
  std::vector<std::uint32_t> labels(l.size(), 0);
  std::vector<bool> done(l.size(), false);
  std::uint32_t next = 0;
  for (std::size_t e = 0; e < l.size(); ++e) {
    if (done[e]) continue;
    for (std::size_t f = e; f < l.size(); ++f)
      if (!done[f] && related(e, f)) {
        labels[f] = next;
        done[f] = true;
      }
    ++next;
  }
  return LineGraphRelation(std::move(labels));
}

LineGraphRelation relation_of(const Graph& l, const Decomposition& d) {
  if (auto v = validate_decomposition(l, d)) throw InvalidStructure(*v);
  std::vector<std::uint32_t> labels(l.size(), 0);
  for (std::size_t k = 0; k < d.size(); ++k) {
    const auto& s = d.sets()[k];
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j) labels[*l.edge_index(s[i], s[j])] = static_cast<std::uint32_t>(k);
  }
  return LineGraphRelation(std::move(labels));
}

Decomposition decomposition_of(const Graph& l, const LineGraphRelation& r) {
  if (auto v = validate_relation(l, r)) throw InvalidStructure(*v);
  std::vector<VertexSet> sets;
  std::vector<std::size_t> incident(l.order(), 0);
  for (const auto& cls : r.classes()) {
    std::vector<Vertex> span;
    for (auto e : cls) {
      span.push_back(l.edge(e).u);
      span.push_back(l.edge(e).v);
    }
    VertexSet vertices(std::move(span));
    for (Vertex x : vertices) ++incident[x];
    sets.push_back(std::move(vertices));
  }
  for (Vertex x = 0; x < l.order(); ++x)
    if (incident[x] < 2) sets.push_back(VertexSet{x});
  return Decomposition(std::move(sets));
}

RestrictedRelation restrict_relation(const Graph& l, const LineGraphRelation& r, const VertexSet& subset) {
  if (auto v = validate_relation(l, r)) throw InvalidStructure(*v);
  auto sub = induced_subgraph(l, subset);
  std::vector<std::uint32_t> labels;
  labels.reserve(sub.graph.size());
  for (const auto& e : sub.graph.edges())
    labels.push_back(r.class_of(*l.edge_index(sub.original[e.u], sub.original[e.v])));
  LineGraphRelation restricted(std::move(labels));
  if (auto v = validate_relation(sub.graph, restricted))
    throw std::logic_error("restriction is not a line graph relation: " + v->describe());
  return {std::move(sub), std::move(restricted)};
}

std::vector<Decomposition> enumerate_decompositions(const Graph& l, const Limits& limits) {
  if (l.order() > limits.enumeration_cap)
    throw CapExceeded("enumerate_decompositions", l.order(), limits.enumeration_cap);
  auto parts = detail::per_component_decompositions(l, limits.enumeration_cap, "enumerate_decompositions");
  std::vector<std::vector<VertexSet>> partial{{}};
  for (const auto& options : parts) {
    std::vector<std::vector<VertexSet>> next;
    next.reserve(partial.size() * options.size());
    for (const auto& prefix : partial)
      for (const auto& choice : options) {
        auto combined = prefix;
        combined.insert(combined.end(), choice.begin(), choice.end());
        next.push_back(std::move(combined));
      }
    partial = std::move(next);
  }
  std::vector<Decomposition> out;
  out.reserve(partial.size());
  for (auto& sets : partial) out.emplace_back(std::move(sets));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LineGraphRelation> enumerate_relations(const Graph& l, const Limits& limits) {
  std::vector<LineGraphRelation> out;
  for (const auto& d : enumerate_decompositions(l, limits)) out.push_back(relation_of(l, d));
  return out;
}

bool is_singular(const Graph& l) {
  for (const auto& entry : singular_graphs())
    if (entry.graph.order() == l.order() && entry.graph.size() == l.size() && is_isomorphic(l, entry.graph))
      return true;
  return false;
}

std::vector<VertexSet> singular_components(const Graph& l) {
  std::vector<VertexSet> out;
  for (const auto& c : connected_components(l))
    if (c.size() <= 6 && is_singular(induced_subgraph(l, c).graph)) out.push_back(c);
  return out;
}

bool star_related(const Graph& l, const EdgeId& e, const EdgeId& f) {
  const Vertex ends[] = {e.u, e.v, f.u, f.v};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (ends[i] != ends[j] && !l.adjacent(ends[i], ends[j])) return false;
  return true;
}

bool star_contains(const Graph& l, const LineGraphRelation& r) {
  check_labels(l, r);
  for (std::size_t e = 0; e < l.size(); ++e)
    for (std::size_t f = e + 1; f < l.size(); ++f)
      if (r.related(e, f) && !star_related(l, l.edge(e), l.edge(f))) return false;
  return true;
}

bool is_nice(const Graph& l, const VertexSet& subset) {
  return subset.size() >= 7 && is_connected(induced_subgraph(l, subset).graph);
}

namespace {

std::vector<std::string_view> content_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto eol = text.find('\n');
    auto line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    lines.push_back(line);
  }
  return lines;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    if (end > pos) out.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

Vertex parse_vertex(std::string_view token, std::size_t line) {
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError("expected a vertex ID, got '" + std::string(token) + "'", line);
  return value;
}

}  // namespace

std::string format_decomposition(const Decomposition& d) {
  std::ostringstream out;
  for (const auto& s : d) {
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
    out << '\n';
  }
  return out.str();
}

Decomposition parse_decomposition(std::string_view text) {
  std::vector<VertexSet> sets;
  std::size_t line_no = 0;
  for (auto line : content_lines(text)) {
    ++line_no;
    auto parts = tokens(line);
    if (parts.empty()) continue;
    std::vector<Vertex> members;
    for (auto t : parts) members.push_back(parse_vertex(t, line_no));
    sets.emplace_back(std::move(members));
  }
  return Decomposition(std::move(sets));
}

std::string format_relation(const Graph& l, const LineGraphRelation& r) {
  check_labels(l, r);
  std::ostringstream out;
  for (const auto& cls : r.classes()) {
    for (std::size_t i = 0; i < cls.size(); ++i) out << (i ? " " : "") << l.edge(cls[i]).u << '-' << l.edge(cls[i]).v;
    out << '\n';
  }
  return out.str();
}

LineGraphRelation parse_relation(const Graph& l, std::string_view text) {
  std::vector<std::optional<std::uint32_t>> labels(l.size());
  std::uint32_t next = 0;
  std::size_t line_no = 0;
  for (auto line : content_lines(text)) {
    ++line_no;
    auto parts = tokens(line);
    if (parts.empty()) continue;
    for (auto t : parts) {
      auto dash = t.find('-');
      if (dash == std::string_view::npos) throw ParseError("expected an edge 'u-v', got '" + std::string(t) + "'", line_no);
      Vertex a = parse_vertex(t.substr(0, dash), line_no);
      Vertex b = parse_vertex(t.substr(dash + 1), line_no);
      auto e = l.edge_index(a, b);
      if (!e) throw ParseError("'" + std::string(t) + "' is not an edge of the graph", line_no);
      if (labels[*e]) throw ParseError("edge '" + std::string(t) + "' listed twice", line_no);
      labels[*e] = next;
    }
    ++next;
  }
  std::vector<std::uint32_t> dense;
  dense.reserve(l.size());
  for (std::size_t e = 0; e < l.size(); ++e) {
    if (!labels[e]) throw ParseError("edge " + std::to_string(l.edge(e).u) + "-" + std::to_string(l.edge(e).v) + " has no class");
    dense.push_back(*labels[e]);
  }
  return LineGraphRelation(std::move(dense));
}

}  // namespace linegraph
