#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mindeg {

using VertexId = std::uint32_t;

// Unordered vertex pair. Graph::edges() always reports u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(VertexId a, VertexId b) noexcept {
  return a < b ? Edge{a, b} : Edge{b, a};
}

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Stored as compressed adjacency: every neighbor list is strictly sorted, the
/// adjacency is symmetric and contains no self-loops.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an arbitrary edge list. Self-loops are dropped and
  /// duplicate (or reversed) pairs collapse to a single edge. Throws InputError
  /// naming the first pair with an endpoint outside [0, n).
  static Graph from_edge_list(std::size_t n, std::span<const Edge> edges);

  std::size_t num_vertices() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return adjacency_.size() / 2; }

  std::span<const VertexId> neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const;
  std::size_t max_degree() const noexcept;
  bool has_edge(VertexId u, VertexId v) const;

  // Sorted lexicographically, u < v in each pair.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(VertexId v) const;

  std::vector<std::size_t> offsets_;
  std::vector<VertexId> adjacency_;
};

/// Edge-set union over the vertex space [0, max(n1, n2)).
Graph graph_union(const Graph& g1, const Graph& g2);

/// Complete graph on u_set embedded in [0, n). Throws InputError if some
/// member of u_set is >= n.
Graph complete_graph(std::span<const VertexId> u_set, std::size_t n);

}  // namespace mindeg
