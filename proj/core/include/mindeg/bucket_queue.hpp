#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "mindeg/graph.hpp"
#include "mindeg/ordering.hpp"

namespace mindeg {

/// Degree-indexed buckets of intrusive doubly-linked lists.
///
/// Insert, erase and update are O(1). `cached_min` is a lower bound on the
/// smallest nonempty bucket: it drops when a vertex lands below it and is
/// advanced lazily by select().
class BucketQueue {
 public:
  explicit BucketQueue(std::size_t n = 0);

  void insert(VertexId v, std::size_t degree);
  void erase(VertexId v);
  void update(VertexId v, std::size_t degree);

  bool contains(VertexId v) const noexcept { return key_[v] != kAbsent; }
  std::size_t key(VertexId v) const noexcept { return key_[v]; }
  bool empty() const noexcept { return size_ == 0; }
  std::size_t size() const noexcept { return size_; }

  /// Returns a vertex of minimum key without removing it. `rng` is only used
  /// for TieBreak::seeded_random and may be null otherwise. Throws StateError
  /// on an empty queue.
  VertexId select(TieBreak rule, std::mt19937_64* rng = nullptr);

  std::size_t min_key();

 private:
  static constexpr VertexId kNil = static_cast<VertexId>(-1);
  static constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);

  std::vector<VertexId> head_;
  std::vector<VertexId> next_;
  std::vector<VertexId> prev_;
  std::vector<std::size_t> key_;
  std::size_t cached_min_ = 0;
  std::size_t size_ = 0;
};

}  // namespace mindeg
