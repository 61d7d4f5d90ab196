#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "mindeg/graph.hpp"

namespace mindeg {

// Which minimum-degree vertex to take when several share the minimum.
enum class TieBreak { smallest_id, largest_id, seeded_random };

// Fill-graph adjacency representation. `automatic` picks dense up to
// OrderingConfig::dense_limit vertices and ordered sets above it.
enum class BackendKind { dense, ordered_set, automatic, naive };

std::string_view to_string(TieBreak rule) noexcept;
std::string_view to_string(BackendKind kind) noexcept;

struct OrderingConfig {
  BackendKind backend = BackendKind::automatic;
  TieBreak tie_break = TieBreak::smallest_id;
  std::uint64_t seed = 0;
  // n * n bits is ~8 MiB at the default.
  std::size_t dense_limit = 8192;
};

/// Outcome of one full elimination run.
///
/// `fill_edges` is E+, every edge present in some fill graph of the run (the
/// input edges plus every inserted fill edge), sorted with u < v.
/// `insertion_attempts` counts every vertex pair examined for insertion,
/// including pairs that were already adjacent.
struct EliminationResult {
  std::vector<VertexId> ordering;
  std::vector<std::size_t> eliminated_degrees;
  std::vector<Edge> fill_edges;
  std::size_t m_plus = 0;
  std::uint64_t insertion_attempts = 0;
  BackendKind backend_used = BackendKind::automatic;

  friend bool operator==(const EliminationResult&, const EliminationResult&) = default;
};

}  // namespace mindeg
