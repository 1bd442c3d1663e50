#include "linegraph/isomorphism.hpp"

#include <algorithm>
#include <map>

#include "dense.hpp"
#include "linegraph/errors.hpp"

namespace linegraph {

namespace {

// Colour refinement run jointly on both graphs so that colours are comparable across them.
std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> refine_colors(const Graph& g,
                                                                              const Graph& h) {
  std::vector<std::uint32_t> cg(g.order()), ch(h.order());
  for (Vertex x = 0; x < g.order(); ++x) cg[x] = static_cast<std::uint32_t>(g.degree(x));
  for (Vertex x = 0; x < h.order(); ++x) ch[x] = static_cast<std::uint32_t>(h.degree(x));

  std::size_t classes = 0;
  for (;;) {
    std::map<std::pair<std::uint32_t, std::vector<std::uint32_t>>, std::uint32_t> palette;
    auto signature = [](const Graph& graph, const std::vector<std::uint32_t>& colors, Vertex x) {
      std::vector<std::uint32_t> around;
      around.reserve(graph.degree(x));
      for (Vertex y : graph.neighbors(x)) around.push_back(colors[y]);
      std::sort(around.begin(), around.end());
      return std::make_pair(colors[x], std::move(around));
    };
    std::vector<std::pair<std::uint32_t, std::vector<std::uint32_t>>> sg, sh;
    sg.reserve(g.order());
    sh.reserve(h.order());
    for (Vertex x = 0; x < g.order(); ++x) sg.push_back(signature(g, cg, x));
    for (Vertex x = 0; x < h.order(); ++x) sh.push_back(signature(h, ch, x));
    for (const auto& s : sg) palette.emplace(s, 0);
    for (const auto& s : sh) palette.emplace(s, 0);
    std::uint32_t next = 0;
    for (auto& [key, id] : palette) id = next++;
    for (Vertex x = 0; x < g.order(); ++x) cg[x] = palette[sg[x]];
    for (Vertex x = 0; x < h.order(); ++x) ch[x] = palette[sh[x]];
    if (palette.size() == classes) break;
    classes = palette.size();
  }
  return {std::move(cg), std::move(ch)};
}

enum class Mode { induced, isomorphism };

class EmbeddingSearch {
 public:
  EmbeddingSearch(const Graph& host, const Graph& pattern, Mode mode)
      : host_(host), pattern_(pattern), dense_(host), mode_(mode) {
    if (mode_ == Mode::isomorphism) {
      auto [cp, ch] = refine_colors(pattern, host);
      pattern_color_ = std::move(cp);
      host_color_ = std::move(ch);
    }
    plan_order();
  }

  // False when a cheap invariant already rules out any embedding.
  bool feasible() const {
    if (mode_ == Mode::induced) return pattern_.order() <= host_.order() && pattern_.size() <= host_.size();
    if (pattern_.order() != host_.order() || pattern_.size() != host_.size()) return false;
    auto a = pattern_color_, b = host_color_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

  void run(const std::function<bool(const Embedding&)>& visit) {
    if (!feasible()) return;
    const std::size_t words = dense_.words();
    buffers_.assign((pattern_.order() + 1) * words, 0);
    used_.assign(words, 0);
    image_.assign(pattern_.order(), 0);
    visit_ = &visit;
    extend(0);
  }

 private:
  void plan_order() {
    const std::size_t n = pattern_.order();
    std::vector<std::size_t> placed_neighbors(n, 0);
    std::vector<bool> placed(n, false);
    std::map<std::uint32_t, std::size_t> class_size;
    if (mode_ == Mode::isomorphism)
      for (auto c : host_color_) ++class_size[c];
    order_.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
      std::optional<Vertex> best;
      for (Vertex x = 0; x < n; ++x) {
        if (placed[x]) continue;
        if (!best) {
          best = x;
          continue;
        }
        auto key = [&](Vertex v) {
          std::size_t rarity = mode_ == Mode::isomorphism ? class_size[pattern_color_[v]] : 0;
          return std::make_tuple(placed_neighbors[v], pattern_.degree(v), -static_cast<long>(rarity));
        };
        if (key(x) > key(*best)) best = x;
      }
      placed[*best] = true;
      order_.push_back(*best);
      for (Vertex y : pattern_.neighbors(*best)) ++placed_neighbors[y];
    }
    std::vector<std::size_t> position(n);
    for (std::size_t i = 0; i < n; ++i) position[order_[i]] = i;
    earlier_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      for (Vertex y : pattern_.neighbors(order_[i]))
        if (position[y] < i) earlier_[i].push_back(y);
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return (*visit_)(image_);
    const std::size_t words = dense_.words();
    const Vertex u = order_[depth];
    std::uint64_t* cand = buffers_.data() + depth * words;
    const auto& back = earlier_[depth];
    if (back.empty()) {
      std::fill(cand, cand + words, ~std::uint64_t{0});
      if (host_.order() % 64 != 0) cand[words - 1] = (std::uint64_t{1} << (host_.order() % 64)) - 1;
    } else {
      const std::uint64_t* first = dense_.row(image_[back[0]]);
      std::copy(first, first + words, cand);
      for (std::size_t k = 1; k < back.size(); ++k) {
        const std::uint64_t* row = dense_.row(image_[back[k]]);
        for (std::size_t w = 0; w < words; ++w) cand[w] &= row[w];
      }
    }
    for (std::size_t w = 0; w < words; ++w) cand[w] &= ~used_[w];

    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t bits = cand[w];
      while (bits) {
        const auto c = static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
        if (mode_ == Mode::isomorphism) {
          if (host_color_[c] != pattern_color_[u]) continue;
        } else if (host_.degree(c) < pattern_.degree(u)) {
          continue;
        }
        // c is adjacent to every image of an earlier neighbour; equal counts rule out extra adjacencies.
        if (detail::popcount_and(dense_.row(c), used_.data(), words) != back.size()) continue;
        image_[u] = c;
        used_[c / 64] |= std::uint64_t{1} << (c % 64);
        const bool go_on = extend(depth + 1);
        used_[c / 64] &= ~(std::uint64_t{1} << (c % 64));
        if (!go_on) return false;
      }
    }
    return true;
  }

  const Graph& host_;
  const Graph& pattern_;
  detail::DenseAdjacency dense_;
  Mode mode_;
  std::vector<std::uint32_t> pattern_color_;
  std::vector<std::uint32_t> host_color_;
  std::vector<Vertex> order_;
  std::vector<std::vector<Vertex>> earlier_;
  std::vector<std::uint64_t> buffers_;
  std::vector<std::uint64_t> used_;
  Embedding image_;
  const std::function<bool(const Embedding&)>* visit_ = nullptr;
};

}  // namespace

bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<Vertex>& mapping) {
  return g.order() == h.order() && is_induced_embedding(h, g, mapping);
}

bool is_induced_embedding(const Graph& host, const Graph& pattern, const Embedding& embedding) {
  if (embedding.size() != pattern.order()) return false;
  std::vector<bool> hit(host.order(), false);
  for (Vertex image : embedding) {
    if (image >= host.order() || hit[image]) return false;
    hit[image] = true;
  }
  for (Vertex x = 0; x < pattern.order(); ++x)
    for (Vertex y = x + 1; y < pattern.order(); ++y)
      if (pattern.adjacent(x, y) != host.adjacent(embedding[x], embedding[y])) return false;
  return true;
}

void for_each_induced_copy(const Graph& host, const Graph& pattern,
                           const std::function<bool(const Embedding&)>& visit) {
  EmbeddingSearch(host, pattern, Mode::induced).run(visit);
}

std::optional<Embedding> find_induced_copy(const Graph& host, const Graph& pattern) {
  std::optional<Embedding> found;
  for_each_induced_copy(host, pattern, [&](const Embedding& e) {
    found = e;
    return false;
  });
  return found;
}

std::optional<IsoWitness> is_isomorphic(const Graph& g, const Graph& h) {
  std::optional<IsoWitness> found;
  EmbeddingSearch(h, g, Mode::isomorphism).run([&](const Embedding& e) {
    found = IsoWitness{e};
    return false;
  });
  return found;
}

std::vector<IsoWitness> all_isomorphisms(const Graph& g, const Graph& h, const Limits& limits) {
  const std::size_t n = std::max(g.order(), h.order());
  if (n > limits.isomorphism_cap) throw CapExceeded("all_isomorphisms", n, limits.isomorphism_cap);
  std::vector<IsoWitness> result;
  EmbeddingSearch(h, g, Mode::isomorphism).run([&](const Embedding& e) {
    result.push_back(IsoWitness{e});
    return true;
  });
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace linegraph
