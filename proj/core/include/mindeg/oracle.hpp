#pragma once

// Brute-force reference implementations built directly from the definitions.
// Dense and slow on purpose; they exist to check the fast engine.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mindeg/graph.hpp"
#include "mindeg/ordering.hpp"

namespace mindeg::oracle {

struct OracleConfig {
  // Dense simulations refuse graphs above this size (ConfigError).
  std::size_t max_vertices = 2000;
};

/// The fill graph after eliminating `eliminated`: surviving u, v are adjacent
/// iff g has a u-v path whose interior lies entirely in `eliminated`. The
/// result keeps g's vertex ids; eliminated vertices are isolated. Computed
/// from the components of the eliminated-induced subgraph, so it does not
/// depend on any order of `eliminated`.
Graph fill_graph(const Graph& g, std::span<const VertexId> eliminated);

/// Fill degrees of the surviving vertices (0 for eliminated ones) without
/// materializing the fill graph. `eliminated_mask` has one entry per vertex.
std::vector<std::size_t> fill_degrees(const Graph& g, std::span<const std::uint8_t> eliminated_mask);

/// Explicit symbolic elimination on an n x n boolean matrix.
class ExplicitElimination {
 public:
  explicit ExplicitElimination(const Graph& g);

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_active() const noexcept { return num_active_; }
  bool active(VertexId v) const noexcept { return active_[v] != 0; }
  std::size_t degree(VertexId v) const noexcept { return degree_[v]; }
  bool has_edge(VertexId u, VertexId v) const noexcept { return matrix_[std::size_t{u} * n_ + v] != 0; }

  // Minimum fill degree over active vertices; requires num_active() > 0.
  std::size_t min_active_degree() const;
  std::vector<VertexId> active_neighbors(VertexId v) const;

  /// Turns v's neighborhood into a clique and removes v. Returns the number of
  /// neighbor pairs examined; inserted pairs are appended to `inserted` if given.
  std::uint64_t eliminate(VertexId v, std::vector<Edge>* inserted = nullptr);

 private:
  std::size_t n_;
  std::vector<std::uint8_t> matrix_;
  std::vector<std::size_t> degree_;
  std::vector<std::uint8_t> active_;
  std::size_t num_active_;
};

/// Straightforward O(n^3) minimum degree ordering. Ties are resolved among the
/// minimum-degree vertices listed in ascending id: first, last, or a uniform
/// draw from std::mt19937_64(seed). insertion_attempts counts every
/// neighborhood pair examined.
EliminationResult naive_minimum_degree(const Graph& g, TieBreak rule, std::uint64_t seed = 0,
                                       const OracleConfig& config = {});

struct OrderingVerdict {
  bool valid = true;
  // 1-based step of the first violation, 0 when valid.
  std::size_t step = 0;
  VertexId eliminated = 0;
  std::size_t eliminated_degree = 0;
  // Smallest-id active vertex of strictly smaller fill degree at that step.
  VertexId witness = 0;
  std::size_t witness_degree = 0;
};

/// Checks that every step of `ordering` eliminates a vertex of minimum fill
/// degree. Throws InputError if `ordering` is not a permutation of [0, n).
OrderingVerdict verify_min_degree_ordering(const Graph& g, std::span<const VertexId> ordering,
                                           const OracleConfig& config = {});

/// |E+| of an arbitrary elimination ordering. Throws InputError if `ordering`
/// is not a permutation of [0, n).
std::size_t fill_count_of_ordering(const Graph& g, std::span<const VertexId> ordering,
                                   const OracleConfig& config = {});

struct Arc {
  VertexId tail = 0;
  VertexId head = 0;
};

// Every edge of the source graph directed exactly once.
struct Orientation {
  std::vector<Arc> arcs;
  std::vector<std::size_t> out_degree;

  std::size_t max_out_degree() const noexcept;
};

/// Directs each edge from its lower-degree endpoint (smaller id on ties), which
/// keeps every out-degree at most sqrt(2m).
Orientation orient_bounded_outdegree(const Graph& g);

}  // namespace mindeg::oracle
