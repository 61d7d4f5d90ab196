#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mindeg/graph.hpp"

namespace mindeg {

/// Set over [0, n) with O(1) clear: v is a member iff its stamp equals the
/// current epoch. 64-bit epochs never wrap in practice.
class EpochArray {
 public:
  explicit EpochArray(std::size_t n = 0) : stamp_(n, 0) {}

  void clear() noexcept { ++epoch_; }
  void insert(VertexId v) noexcept { stamp_[v] = epoch_; }
  bool contains(VertexId v) const noexcept { return stamp_[v] == epoch_; }
  std::uint64_t epoch() const noexcept { return epoch_; }
  std::size_t capacity() const noexcept { return stamp_.size(); }

 private:
  std::vector<std::uint64_t> stamp_;
  std::uint64_t epoch_ = 1;
};

}  // namespace mindeg
