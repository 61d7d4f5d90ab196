#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "mindeg/bucket_queue.hpp"
#include "mindeg/epoch_array.hpp"
#include "mindeg/errors.hpp"
#include "mindeg/fill_adjacency.hpp"
#include "mindeg/graph.hpp"
#include "mindeg/hyperedge_store.hpp"
#include "mindeg/ordering.hpp"

namespace mindeg {

// Work done by one call to MinimumDegreeEngine::eliminate_vertex.
struct StepStats {
  std::uint64_t attempts = 0;
  std::size_t fill_added = 0;
  std::size_t edges_removed = 0;
  std::size_t hyperedges_merged = 0;
  std::size_t w_size = 0;
};

/// Exact minimum degree elimination that keeps two views of the fill graph in
/// sync: an explicit adjacency (for degrees) and a hypergraph whose clique
/// union is the same graph (to skip pairs that are already known adjacent).
///
/// Eliminating `a` merges every valid hyperedge containing `a` into
/// W = N+(a), one hyperedge U at a time. Only pairs in (W \ U) x (U \ W) can be
/// missing from the adjacency, so those are the only insertion attempts made.
/// The engine is single-threaded; drive it with select_minimum_degree() and
/// eliminate_vertex() or use fast_minimum_degree().
template <AdjacencyStorage Storage>
class MinimumDegreeEngine {
 public:
  MinimumDegreeEngine(const Graph& g, TieBreak rule, std::uint64_t seed = 0)
      : fill_(g),
        hyperedges_(g.num_vertices()),
        queue_(g.num_vertices()),
        in_w_(g.num_vertices()),
        in_u_(g.num_vertices()),
        fill_edges_(g.edges()),
        rule_(rule),
        rng_(seed) {
    for (const Edge& e : fill_edges_) {
      const VertexId pair[2] = {e.u, e.v};
      hyperedges_.add(pair);
    }
    for (VertexId v = 0; v < g.num_vertices(); ++v) queue_.insert(v, fill_.fill_degree(v));
    ordering_.reserve(g.num_vertices());
    eliminated_degrees_.reserve(g.num_vertices());
  }

  bool finished() const noexcept { return queue_.empty(); }

  /// An active vertex of minimum fill degree; ties resolved by the engine's
  /// rule. Throws StateError once every vertex is eliminated.
  VertexId select_minimum_degree() { return queue_.select(rule_, &rng_); }

  StepStats eliminate_vertex(VertexId a) {
    if (a >= fill_.num_vertices() || !fill_.active(a)) {
      throw StateError("vertex " + std::to_string(a) + " is not active");
    }
    StepStats stats;
    const std::uint64_t attempts_before = fill_.insertion_attempts();

    queue_.erase(a);
    fill_.deactivate(a);
    ordering_.push_back(a);
    eliminated_degrees_.push_back(fill_.fill_degree(a));

    in_w_.clear();
    w_.clear();
    for (HyperedgeStore::Handle h : hyperedges_.incident(a)) {
      if (!hyperedges_.valid(h)) continue;
      hyperedges_.invalidate(h);
      ++stats.hyperedges_merged;
      const auto members = hyperedges_.members(h);

      y_.clear();
      for (VertexId v : members) {
        if (v != a && !in_w_.contains(v)) y_.push_back(v);
      }
      if (y_.empty()) continue;

      in_u_.clear();
      for (VertexId v : members) in_u_.insert(v);
      for (VertexId x : w_) {
        if (in_u_.contains(x)) continue;
        for (VertexId y : y_) {
          if (fill_.attempt_insert(x, y)) {
            fill_edges_.push_back(make_edge(x, y));
            ++stats.fill_added;
          }
        }
      }

      for (VertexId b : y_) {
        fill_.remove_edge(a, b);
        ++stats.edges_removed;
        in_w_.insert(b);
        w_.push_back(b);
      }
    }

    if (!w_.empty()) hyperedges_.add(w_);
    for (VertexId b : w_) queue_.update(b, fill_.fill_degree(b));

    stats.attempts = fill_.insertion_attempts() - attempts_before;
    stats.w_size = w_.size();
    return stats;
  }

  void run() {
    while (!finished()) eliminate_vertex(select_minimum_degree());
  }

  /// Packages the counters of a finished run. Throws StateError if vertices
  /// remain active.
  EliminationResult result(BackendKind tag) const {
    if (!finished()) throw StateError("elimination has not finished");
    EliminationResult out;
    out.ordering = ordering_;
    out.eliminated_degrees = eliminated_degrees_;
    out.fill_edges = fill_edges_;
    std::sort(out.fill_edges.begin(), out.fill_edges.end());
    out.m_plus = out.fill_edges.size();
    out.insertion_attempts = fill_.insertion_attempts();
    out.backend_used = tag;
    return out;
  }

  const FillAdjacency<Storage>& fill() const noexcept { return fill_; }
  const HyperedgeStore& hyperedges() const noexcept { return hyperedges_; }
  const BucketQueue& queue() const noexcept { return queue_; }
  std::span<const VertexId> ordering() const noexcept { return ordering_; }

 private:
  FillAdjacency<Storage> fill_;
  HyperedgeStore hyperedges_;
  BucketQueue queue_;
  EpochArray in_w_;
  EpochArray in_u_;
  std::vector<VertexId> w_;
  std::vector<VertexId> y_;
  std::vector<Edge> fill_edges_;
  std::vector<VertexId> ordering_;
  std::vector<std::size_t> eliminated_degrees_;
  TieBreak rule_;
  std::mt19937_64 rng_;
};

/// Resolves BackendKind::automatic against config.dense_limit. Throws
/// ConfigError for an explicit dense request above the limit or for `naive`.
BackendKind resolve_backend(std::size_t n, const OrderingConfig& config);

/// Exact minimum degree ordering of g. Identical (g, config) pairs give
/// identical results, counters included.
EliminationResult fast_minimum_degree(const Graph& g, const OrderingConfig& config = {});

}  // namespace mindeg
