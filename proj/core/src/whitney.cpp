#include "linegraph/whitney.hpp"

#include "linegraph/catalog.hpp"
#include "linegraph/errors.hpp"

namespace linegraph {

std::string to_string(WhitneyResult::Outcome outcome) {
  switch (outcome) {
    case WhitneyResult::Outcome::induced: return "induced";
    case WhitneyResult::Outcome::exceptional: return "exceptional";
    case WhitneyResult::Outcome::not_induced: return "not_induced";
  }
  return "unknown";
}

bool is_line_graph_isomorphism(const Graph& g, const Graph& h, const EdgeMap& phi) {
  if (phi.size() != g.size() || g.size() != h.size()) return false;
  std::vector<bool> hit(h.size(), false);
  for (auto f : phi) {
    if (f >= h.size() || hit[f]) return false;
    hit[f] = true;
  }
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      const bool meet_g = g.edge(i).shared_endpoint(g.edge(j)).has_value();
      const bool meet_h = h.edge(phi[i]).shared_endpoint(h.edge(phi[j])).has_value();
      if (meet_g != meet_h) return false;
    }
  return true;
}

std::optional<std::string> exceptional_name(const Graph& g) {
  for (const auto& entry : exceptional_graphs())
    if (entry.graph.order() == g.order() && entry.graph.size() == g.size() && is_isomorphic(g, entry.graph))
      return entry.name;
  return std::nullopt;
}

namespace {

// sigma forced by phi, or the first G-edge where forcing fails.
struct Forced {
  std::vector<Vertex> sigma;
  std::optional<EdgeId> failure;
};

Forced force_sigma(const Graph& g, const Graph& h, const EdgeMap& phi) {
  const std::size_t n = g.order();
  Forced out{std::vector<Vertex>(n, 0), std::nullopt};
  std::vector<bool> known(n, false);
  auto image = [&](Vertex x, Vertex y) { return h.edge(phi[*g.edge_index(x, y)]); };

  if (g.size() == 0) return out;  // K1: the only map
  for (Vertex x = 0; x < n; ++x) {
    auto nbrs = g.neighbors(x);
    if (nbrs.size() < 2) continue;
    auto common = image(x, nbrs[0]).shared_endpoint(image(x, nbrs[1]));
    if (!common) {
      out.failure = EdgeId::of(x, nbrs[1]);
      return out;
    }
    out.sigma[x] = *common;
    known[x] = true;
  }
  for (Vertex x = 0; x < n; ++x) {
    if (known[x]) continue;
    const Vertex y = g.neighbors(x)[0];
    const EdgeId e = image(x, y);
    if (known[y]) {
      if (!e.touches(out.sigma[y])) {
        out.failure = EdgeId::of(x, y);
        return out;
      }
      out.sigma[x] = e.other(out.sigma[y]);
    } else {
      // Both ends have degree 1, so G is K2; either orientation works.
      out.sigma[x] = x < y ? e.u : e.v;
    }
    known[x] = true;
  }
  return out;
}

}  // namespace

WhitneyResult whitney_lift(const Graph& g, const Graph& h, const EdgeMap& phi) {
  if (g.order() == 0 || h.order() == 0) throw InvalidInput("whitney_lift: graphs must be nonempty");
  if (!is_connected(g) || !is_connected(h)) throw InvalidInput("whitney_lift: graphs must be connected");
  if (!is_line_graph_isomorphism(g, h, phi))
    throw InvalidInput("whitney_lift: phi is not an isomorphism between the line graphs");

  WhitneyResult result;
  std::optional<EdgeId> failure;
  if (g.order() == h.order()) {
    Forced forced = force_sigma(g, h, phi);
    failure = forced.failure;
    if (!failure) {
      std::vector<bool> hit(h.order(), false);
      for (Vertex x = 0; x < g.order() && !failure; ++x) {
        if (hit[forced.sigma[x]]) failure = g.size() ? std::optional<EdgeId>(g.edge(0)) : std::nullopt;
        hit[forced.sigma[x]] = true;
      }
      for (std::size_t i = 0; i < g.size() && !failure; ++i) {
        const EdgeId& e = g.edge(i);
        if (EdgeId::of(forced.sigma[e.u], forced.sigma[e.v]) != h.edge(phi[i])) failure = e;
      }
      if (!failure) {
        result.outcome = WhitneyResult::Outcome::induced;
        result.sigma = IsoWitness{std::move(forced.sigma)};
        return result;
      }
    }
  } else if (g.size() > 0) {
    failure = g.edge(0);
  }

  auto name_g = exceptional_name(g);
  auto name_h = exceptional_name(h);
  if (name_g || name_h) {
    result.outcome = WhitneyResult::Outcome::exceptional;
    if (name_g && name_h && *name_g != *name_h) result.exceptional_name = *name_g + "/" + *name_h;
    else result.exceptional_name = name_g ? *name_g : *name_h;
    return result;
  }
  result.outcome = WhitneyResult::Outcome::not_induced;
  result.counterexample = failure;
  return result;
}

}  // namespace linegraph
