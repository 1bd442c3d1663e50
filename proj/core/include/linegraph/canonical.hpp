#pragma once

#include <functional>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "linegraph/graph.hpp"
#include "linegraph/io.hpp"
#include "linegraph/krausz.hpp"
#include "linegraph/limits.hpp"

namespace linegraph {

// Ranks every vertex inside its connected component under ascending vertex ID.
//   rank(x)            1-based position of x in its component
//   component_size(x)  number of vertices in the component of x
//   nth(k, x)          the k-th vertex (1-based) of the component of x, if k <= size
class ComponentRanking {
 public:
  explicit ComponentRanking(const Graph& l);

  std::size_t rank(Vertex x) const { return rank_.at(x); }
  std::size_t component_size(Vertex x) const { return components_[component_.at(x)].size(); }
  std::optional<Vertex> nth(std::size_t k, Vertex x) const;
  std::size_t component_index(Vertex x) const { return component_.at(x); }
  const std::vector<VertexSet>& components() const noexcept { return components_; }

  // The component of x transported to vertices 0..s-1 through rank - 1.
  Graph canonical_form(Vertex x) const;

 private:
  const Graph* graph_;
  std::vector<VertexSet> components_;
  std::vector<std::size_t> component_;
  std::vector<std::size_t> rank_;
};

// The least valid relation (by label vector) of a connected labelled line graph.
// Throws NotLineGraph when there is none.
LineGraphRelation least_relation(const Graph& gamma, const Limits& limits = {});

struct NoLock {
  void lock() noexcept {}
  void unlock() noexcept {}
  bool try_lock() noexcept { return true; }
  void lock_shared() noexcept {}
  void unlock_shared() noexcept {}
  bool try_lock_shared() noexcept { return true; }
};

// Memo table from a labelled canonical form to its fixed relation. The first stored value
// for a form is the one every caller observes.
template <typename Mutex>
class BasicRelationMemo {
 public:
  LineGraphRelation get_or_compute(const Graph& gamma, const Limits& limits = {}) {
    std::string key = emit_graph6(gamma);
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    LineGraphRelation computed = least_relation(gamma, limits);
    std::unique_lock lock(mutex_);
    return table_.try_emplace(std::move(key), std::move(computed)).first->second;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

 private:
  mutable Mutex mutex_;
  std::unordered_map<std::string, LineGraphRelation> table_;
};

using RelationMemo = BasicRelationMemo<std::shared_mutex>;
using LocalRelationMemo = BasicRelationMemo<NoLock>;

using RelationLookup = std::function<LineGraphRelation(const Graph&)>;

// Relation on L built by copying, for each component, the fixed relation of its canonical
// form back through the rank map. Throws NotLineGraph naming the first failing component.
LineGraphRelation canonical_relation(const Graph& l, const RelationLookup& lookup, const Limits& limits = {});

template <typename Mutex>
LineGraphRelation canonical_relation(const Graph& l, BasicRelationMemo<Mutex>& memo, const Limits& limits = {}) {
  return canonical_relation(
      l, [&](const Graph& gamma) { return memo.get_or_compute(gamma, limits); }, limits);
}

LineGraphRelation canonical_relation(const Graph& l, const Limits& limits = {});

}  // namespace linegraph
