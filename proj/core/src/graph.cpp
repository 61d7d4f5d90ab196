#include "mindeg/graph.hpp"

#include <algorithm>
#include <string>

#include "mindeg/errors.hpp"

namespace mindeg {

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> edges) {
  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw InputError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                       ") has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (e.u != e.v) normalized.push_back(make_edge(e.u, e.v));
  }
  std::sort(normalized.begin(), normalized.end());
  normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (const Edge& e : normalized) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];

  g.adjacency_.resize(2 * normalized.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Sorted (u, v) order visits every w < x paired with x before any w > x,
  // so each neighbor list comes out ascending.
  for (const Edge& e : normalized) {
    g.adjacency_[cursor[e.u]++] = e.v;
    g.adjacency_[cursor[e.v]++] = e.u;
  }
  return g;
}

void Graph::check_vertex(VertexId v) const {
  if (v >= num_vertices()) {
    throw InputError("vertex " + std::to_string(v) + " outside [0, " +
                     std::to_string(num_vertices()) + ")");
  }
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  check_vertex(v);
  return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

std::size_t Graph::degree(VertexId v) const {
  check_vertex(v);
  return offsets_[v + 1] - offsets_[v];
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (std::size_t v = 0; v + 1 < offsets_.size(); ++v) {
    best = std::max(best, offsets_[v + 1] - offsets_[v]);
  }
  return best;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  auto nbrs = neighbors(u);
  check_vertex(v);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (VertexId u = 0; u < num_vertices(); ++u) {
    for (VertexId v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

Graph graph_union(const Graph& g1, const Graph& g2) {
  std::vector<Edge> all = g1.edges();
  std::vector<Edge> rhs = g2.edges();
  all.insert(all.end(), rhs.begin(), rhs.end());
  return Graph::from_edge_list(std::max(g1.num_vertices(), g2.num_vertices()), all);
}

Graph complete_graph(std::span<const VertexId> u_set, std::size_t n) {
  std::vector<VertexId> members(u_set.begin(), u_set.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::vector<Edge> edges;
  edges.reserve(members.size() * (members.size() > 0 ? members.size() - 1 : 0) / 2);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      edges.push_back({members[i], members[j]});
    }
  }
  if (!members.empty() && members.back() >= n) {
    throw InputError("vertex " + std::to_string(members.back()) + " outside [0, " +
                     std::to_string(n) + ")");
  }
  return Graph::from_edge_list(n, edges);
}

}  // namespace mindeg
