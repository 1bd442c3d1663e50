#include "linegraph/rootgraph.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "linegraph/errors.hpp"
#include "linegraph/isomorphism.hpp"

namespace linegraph {

std::string to_string(const RootVertex& v) {
  switch (v.kind) {
    case RootVertex::Kind::clique: return "C" + std::to_string(v.index);
    case RootVertex::Kind::auxiliary: return "aux" + std::to_string(v.index);
    case RootVertex::Kind::line_vertex: return "v" + std::to_string(v.index);
    case RootVertex::Kind::label: return "x" + std::to_string(v.index);
    case RootVertex::Kind::isolated_copy:
      return "(" + std::to_string(v.copy) + ",v" + std::to_string(v.index) + ")";
  }
  return "?";
}

bool phi_is_isomorphism(const RootWitness& w, const Graph& l) {
  if (w.phi.size() != w.root.size() || w.root.size() != l.order()) return false;
  std::vector<bool> hit(l.order(), false);
  for (Vertex x : w.phi) {
    if (x >= l.order() || hit[x]) return false;
    hit[x] = true;
  }
  const auto& edges = w.root.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const bool meet = edges[i].shared_endpoint(edges[j]).has_value();
      if (meet != l.adjacent(w.phi[i], w.phi[j])) return false;
    }
  return true;
}

namespace {

std::vector<Vertex> phi_table(const Graph& root, const std::vector<std::pair<EdgeId, Vertex>>& assignment) {
  std::vector<Vertex> phi(root.size());
  for (const auto& [e, x] : assignment) phi[*root.edge_index(e)] = x;
  return phi;
}

}  // namespace

RootWitness root_from_decomposition(const Graph& l, const Decomposition& d) {
  if (auto v = validate_decomposition(l, d)) throw InvalidStructure(*v);

  std::vector<std::vector<Vertex>> holders(l.order());
  std::vector<std::size_t> classes(l.order(), 0);
  for (std::size_t k = 0; k < d.size(); ++k)
    for (Vertex x : d.sets()[k]) {
      holders[x].push_back(static_cast<Vertex>(k));
      if (d.sets()[k].size() >= 2) ++classes[x];
    }

  RootWitness w;
  for (std::size_t k = 0; k < d.size(); ++k)
    w.origin.push_back({RootVertex::Kind::clique, static_cast<std::uint32_t>(k)});
  std::vector<std::pair<EdgeId, Vertex>> assignment;
  for (Vertex x = 0; x < l.order(); ++x) {
    if (holders[x].size() == 2) {
      assignment.emplace_back(EdgeId::of(holders[x][0], holders[x][1]), x);
    } else {
      // Isolated vertex: its singleton plus a fresh endpoint.
      auto aux = static_cast<Vertex>(w.origin.size());
      w.origin.push_back({RootVertex::Kind::auxiliary, x});
      assignment.emplace_back(EdgeId::of(holders[x][0], aux), x);
    }
    w.roles.push_back(static_cast<VertexRole>(classes[x]));
  }
  std::vector<EdgeId> edges;
  edges.reserve(assignment.size());
  for (const auto& [e, x] : assignment) edges.push_back(e);
  w.root = Graph(w.origin.size(), edges);
  w.phi = phi_table(w.root, assignment);
  if (w.root.size() != l.order()) throw std::logic_error("root_from_decomposition: two vertices share a root edge");
  return w;
}

RootWitness root_from_relation(const Graph& l, const LineGraphRelation& r,
                               const std::vector<AuxiliaryIncidence>& auxiliary) {
  if (auto v = validate_relation(l, r)) throw InvalidStructure(*v);

  std::vector<std::set<std::uint32_t>> labels(l.order());
  for (std::size_t e = 0; e < l.size(); ++e) {
    labels[l.edge(e).u].insert(r.class_of(e));
    labels[l.edge(e).v].insert(r.class_of(e));
  }
  // Extra labels are renumbered after the classes, in ascending caller order.
  std::map<std::uint32_t, std::uint32_t> extra_id;
  for (const auto& inc : auxiliary) extra_id.emplace(inc.label, 0);
  {
    auto next = static_cast<std::uint32_t>(r.class_count());
    for (auto& [label, id] : extra_id) id = next++;
  }
  std::map<std::uint32_t, Vertex> extra_owner;
  for (const auto& inc : auxiliary) {
    if (inc.vertex >= l.order()) throw InvalidInput("auxiliary incidence on vertex outside L");
    auto [it, fresh] = extra_owner.emplace(inc.label, inc.vertex);
    if (!fresh)
      throw InvalidInput("auxiliary label " + std::to_string(inc.label) + " meets more than one vertex" +
                         (it->second == inc.vertex ? " (duplicate incidence)" : ""));
    labels[inc.vertex].insert(extra_id[inc.label]);
  }
  for (Vertex x = 0; x < l.order(); ++x)
    if (labels[x].size() > 2)
      throw InvalidInput("vertex " + std::to_string(x) + " meets more than two labels");

  RootWitness w;
  std::vector<Vertex> v1_vertex(l.order(), 0);
  for (Vertex x = 0; x < l.order(); ++x) {
    w.roles.push_back(static_cast<VertexRole>(labels[x].size()));
    if (labels[x].size() == 1) {
      v1_vertex[x] = static_cast<Vertex>(w.origin.size());
      w.origin.push_back({RootVertex::Kind::line_vertex, x});
    }
  }
  const auto label_base = static_cast<Vertex>(w.origin.size());
  const std::size_t label_count = r.class_count() + extra_id.size();
  for (std::size_t k = 0; k < label_count; ++k)
    w.origin.push_back({RootVertex::Kind::label, static_cast<std::uint32_t>(k)});

  std::vector<std::pair<EdgeId, Vertex>> assignment;
  for (Vertex x = 0; x < l.order(); ++x) {
    const auto& mine = labels[x];
    if (mine.empty()) {  // E0
      auto zero = static_cast<Vertex>(w.origin.size());
      w.origin.push_back({RootVertex::Kind::isolated_copy, x, 0});
      w.origin.push_back({RootVertex::Kind::isolated_copy, x, 1});
      assignment.emplace_back(EdgeId{zero, zero + 1}, x);
    } else if (mine.size() == 1) {  // E1
      assignment.emplace_back(EdgeId::of(v1_vertex[x], label_base + *mine.begin()), x);
    } else {  // E2
      assignment.emplace_back(EdgeId::of(label_base + *mine.begin(), label_base + *mine.rbegin()), x);
    }
  }
  std::vector<EdgeId> edges;
  edges.reserve(assignment.size());
  for (const auto& [e, x] : assignment) edges.push_back(e);
  w.root = Graph(w.origin.size(), edges);
  if (w.root.size() != l.order())
    throw std::logic_error("root_from_relation: two vertices of L share a pair of labels");
  w.phi = phi_table(w.root, assignment);
  return w;
}

RoundtripReport verify_roundtrip(const Graph& l, const Limits& limits) {
  RoundtripReport report;
  try {
    report.decomposition = is_line_graph_krausz(l, limits);
  } catch (const CapExceeded& e) {
    report.error = e.what();
    return report;
  }
  if (!report.decomposition) {
    report.witness = is_line_graph_beineke(l).witness;
    return report;
  }
  report.line_graph = true;
  report.root = root_from_decomposition(l, *report.decomposition);
  report.roundtrip_isomorphic = is_isomorphic(line_graph(report.root->root).graph, l).has_value();
  return report;
}

namespace {

class Colorer {
 public:
  explicit Colorer(const Graph& g)
      : g_(g), n_(g.order()), words_((n_ + 63) / 64), adjacency_(n_ * words_, 0), color_(n_, -1) {
    std::size_t max_degree = 0;
    for (Vertex x = 0; x < n_; ++x) {
      max_degree = std::max(max_degree, g.degree(x));
      for (Vertex y : g.neighbors(x)) adjacency_[x * words_ + y / 64] |= std::uint64_t{1} << (y % 64);
    }
    palette_ = max_degree + 1;
    seen_.assign(n_ * palette_, 0);
    saturation_.assign(n_, 0);
  }

  std::size_t solve() {
    if (n_ == 0) return 0;
    lower_ = greedy_clique();
    best_ = greedy();
    if (best_ > lower_) branch(0, 0);
    return best_;
  }

 private:
  bool adjacent(Vertex x, Vertex y) const { return (adjacency_[x * words_ + y / 64] >> (y % 64)) & 1U; }

  std::size_t greedy_clique() const {
    std::vector<Vertex> order(n_);
    for (Vertex x = 0; x < n_; ++x) order[x] = x;
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g_.degree(a) > g_.degree(b); });
    std::size_t best = 1;
    for (std::size_t s = 0; s < std::min<std::size_t>(n_, 16); ++s) {
      std::vector<Vertex> clique{order[s]};
      for (Vertex x : order) {
        if (x == order[s] || !adjacent(x, order[s])) continue;
        if (std::all_of(clique.begin(), clique.end(), [&](Vertex c) { return adjacent(x, c); })) clique.push_back(x);
      }
      best = std::max(best, clique.size());
    }
    return best;
  }

  void assign(Vertex x, std::size_t c) {
    color_[x] = static_cast<int>(c);
    for (Vertex y : g_.neighbors(x))
      if (seen_[y * palette_ + c]++ == 0) ++saturation_[y];
  }

  void unassign(Vertex x) {
    const auto c = static_cast<std::size_t>(color_[x]);
    color_[x] = -1;
    for (Vertex y : g_.neighbors(x))
      if (--seen_[y * palette_ + c] == 0) --saturation_[y];
  }

  bool allowed(Vertex x, std::size_t c) const { return seen_[x * palette_ + c] == 0; }

  // Most saturated uncoloured vertex, ties to higher degree.
  Vertex pick() const {
    Vertex best = 0;
    bool found = false;
    for (Vertex x = 0; x < n_; ++x) {
      if (color_[x] >= 0) continue;
      if (!found || saturation_[x] > saturation_[best] ||
          (saturation_[x] == saturation_[best] && g_.degree(x) > g_.degree(best))) {
        best = x;
        found = true;
      }
    }
    return best;
  }

  std::size_t greedy() {
    std::size_t used = 0;
    std::vector<Vertex> trail;
    for (std::size_t k = 0; k < n_; ++k) {
      Vertex x = pick();
      std::size_t c = 0;
      while (!allowed(x, c)) ++c;
      assign(x, c);
      trail.push_back(x);
      used = std::max(used, c + 1);
    }
    for (auto it = trail.rbegin(); it != trail.rend(); ++it) unassign(*it);
    return used;
  }

  void branch(std::size_t colored, std::size_t used) {
    if (colored == n_) {
      best_ = std::min(best_, used);
      return;
    }
    Vertex x = pick();
    for (std::size_t c = 0; c <= used && c + 1 < best_; ++c) {
      if (!allowed(x, c)) continue;
      assign(x, c);
      branch(colored + 1, std::max(used, c + 1));
      unassign(x);
      if (best_ == lower_) return;
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> adjacency_;
  std::vector<int> color_;
  std::size_t palette_ = 0;
  std::vector<std::uint32_t> seen_;  // seen_[x * palette_ + c]: neighbours of x coloured c
  std::vector<std::size_t> saturation_;
  std::size_t lower_ = 0;
  std::size_t best_ = 0;
};

}  // namespace

std::size_t chromatic_number_exact(const Graph& g, std::size_t cap) {
  if (g.order() > cap) throw CapExceeded("chromatic_number_exact", g.order(), cap);
  std::size_t chi = 0;
  for (const auto& c : connected_components(g)) {
    auto sub = induced_subgraph(g, c);
    chi = std::max(chi, Colorer(sub.graph).solve());
  }
  return chi;
}

}  // namespace linegraph
