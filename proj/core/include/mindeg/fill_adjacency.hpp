#pragma once

#include <bit>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "mindeg/graph.hpp"

namespace mindeg {

// Symmetric edge storage behind FillAdjacency.
template <typename S>
concept AdjacencyStorage = requires(S s, const S cs, VertexId u, VertexId v) {
  S(std::size_t{});
  { cs.contains(u, v) } -> std::same_as<bool>;
  s.insert(u, v);
  s.erase(u, v);
};

/// n x n bit matrix; O(1) queries and updates, n^2 bits of memory.
class DenseStorage {
 public:
  explicit DenseStorage(std::size_t n) : words_per_row_((n + 63) / 64), bits_(n * words_per_row_, 0) {}

  bool contains(VertexId u, VertexId v) const noexcept {
    return (bits_[index(u, v)] >> (v & 63U)) & 1U;
  }
  void insert(VertexId u, VertexId v) noexcept {
    bits_[index(u, v)] |= bit(v);
    bits_[index(v, u)] |= bit(u);
  }
  void erase(VertexId u, VertexId v) noexcept {
    bits_[index(u, v)] &= ~bit(v);
    bits_[index(v, u)] &= ~bit(u);
  }

  template <typename F>
  void for_each_neighbor(VertexId u, F&& f) const {
    const std::size_t base = std::size_t{u} * words_per_row_;
    for (std::size_t w = 0; w < words_per_row_; ++w) {
      for (std::uint64_t word = bits_[base + w]; word != 0; word &= word - 1) {
        f(static_cast<VertexId>(w * 64 + static_cast<std::size_t>(std::countr_zero(word))));
      }
    }
  }

 private:
  std::size_t index(VertexId u, VertexId v) const noexcept {
    return std::size_t{u} * words_per_row_ + (v >> 6U);
  }
  static std::uint64_t bit(VertexId v) noexcept { return std::uint64_t{1} << (v & 63U); }

  std::size_t words_per_row_;
  std::vector<std::uint64_t> bits_;
};

/// Per-vertex balanced search trees; O(log n) operations, O(edges) memory.
class OrderedSetStorage {
 public:
  explicit OrderedSetStorage(std::size_t n) : rows_(n) {}

  bool contains(VertexId u, VertexId v) const { return rows_[u].contains(v); }
  void insert(VertexId u, VertexId v) {
    rows_[u].insert(v);
    rows_[v].insert(u);
  }
  void erase(VertexId u, VertexId v) {
    rows_[u].erase(v);
    rows_[v].erase(u);
  }

  template <typename F>
  void for_each_neighbor(VertexId u, F&& f) const {
    for (VertexId v : rows_[u]) f(v);
  }

 private:
  std::vector<std::set<VertexId>> rows_;
};

/// Mutable fill graph: edge storage plus per-vertex fill degree and activity,
/// instrumented with the number of insertion attempts.
template <AdjacencyStorage Storage>
class FillAdjacency {
 public:
  explicit FillAdjacency(const Graph& g)
      : storage_(g.num_vertices()), degree_(g.num_vertices(), 0), active_(g.num_vertices(), 1) {
    for (const Edge& e : g.edges()) {
      storage_.insert(e.u, e.v);
      ++degree_[e.u];
      ++degree_[e.v];
    }
  }

  std::size_t num_vertices() const noexcept { return degree_.size(); }
  bool has_edge(VertexId u, VertexId v) const { return storage_.contains(u, v); }
  std::size_t fill_degree(VertexId v) const noexcept { return degree_[v]; }
  bool active(VertexId v) const noexcept { return active_[v] != 0; }
  void deactivate(VertexId v) noexcept { active_[v] = 0; }

  /// Counts one attempt, then inserts {u, v} unless already present.
  bool attempt_insert(VertexId u, VertexId v) {
    ++attempts_;
    if (storage_.contains(u, v)) return false;
    storage_.insert(u, v);
    ++degree_[u];
    ++degree_[v];
    ++insertions_;
    return true;
  }

  void remove_edge(VertexId u, VertexId v) {
    storage_.erase(u, v);
    --degree_[u];
    --degree_[v];
  }

  template <typename F>
  void for_each_neighbor(VertexId u, F&& f) const {
    storage_.for_each_neighbor(u, std::forward<F>(f));
  }

  // Current edge set, sorted, u < v.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (VertexId u = 0; u < num_vertices(); ++u) {
      storage_.for_each_neighbor(u, [&](VertexId v) {
        if (u < v) out.push_back({u, v});
      });
    }
    return out;
  }

  std::uint64_t insertion_attempts() const noexcept { return attempts_; }
  std::uint64_t insertions() const noexcept { return insertions_; }

 private:
  Storage storage_;
  std::vector<std::size_t> degree_;
  std::vector<std::uint8_t> active_;
  std::uint64_t attempts_ = 0;
  std::uint64_t insertions_ = 0;
};

}  // namespace mindeg
