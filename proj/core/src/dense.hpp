#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "linegraph/graph.hpp"

namespace linegraph::detail {

// Row-major adjacency bit matrix for the backtracking searches.
class DenseAdjacency {
 public:
  explicit DenseAdjacency(const Graph& g)
      : n_(g.order()), words_((g.order() + 63) / 64), bits_(n_ * words_, 0) {
    for (const auto& e : g.edges()) {
      set(e.u, e.v);
      set(e.v, e.u);
    }
  }

  std::size_t order() const noexcept { return n_; }
  std::size_t words() const noexcept { return words_; }
  const std::uint64_t* row(std::size_t x) const noexcept { return bits_.data() + x * words_; }
  bool test(std::size_t x, std::size_t y) const noexcept {
    return (row(x)[y / 64] >> (y % 64)) & 1u;
  }

 private:
  void set(std::size_t x, std::size_t y) { bits_[x * words_ + y / 64] |= std::uint64_t{1} << (y % 64); }

  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

inline std::size_t popcount_and(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return total;
}

}  // namespace linegraph::detail
