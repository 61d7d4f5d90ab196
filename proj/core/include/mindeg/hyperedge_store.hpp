#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mindeg/graph.hpp"

namespace mindeg {

/// Append-only collection of vertex sets (hyperedges) whose clique union is
/// the current fill graph.
///
/// Removal only flips a validity marker; incidence lists keep stale handles and
/// readers skip them. An invalidated hyperedge never becomes valid again.
class HyperedgeStore {
 public:
  using Handle = std::uint32_t;

  explicit HyperedgeStore(std::size_t num_vertices = 0) : incidence_(num_vertices) {}

  /// Appends a hyperedge and registers it with each member's incidence list.
  Handle add(std::span<const VertexId> members);
  void invalidate(Handle h);

  bool valid(Handle h) const noexcept { return valid_[h] != 0; }
  std::span<const VertexId> members(Handle h) const noexcept {
    return {members_.data() + offsets_[h], offsets_[h + 1] - offsets_[h]};
  }
  // All hyperedges ever containing v, valid or not, in creation order.
  std::span<const Handle> incident(VertexId v) const noexcept { return incidence_[v]; }

  std::size_t size() const noexcept { return valid_.size(); }
  std::size_t num_valid() const noexcept { return num_valid_; }
  std::size_t num_vertices() const noexcept { return incidence_.size(); }

 private:
  std::vector<VertexId> members_;
  std::vector<std::size_t> offsets_{0};
  std::vector<std::uint8_t> valid_;
  std::vector<std::vector<Handle>> incidence_;
  std::size_t num_valid_ = 0;
};

}  // namespace mindeg
