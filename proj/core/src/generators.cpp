#include "mindeg/generators.hpp"

#include <random>
#include <unordered_set>
#include <vector>

namespace mindeg {

Graph random_gnp(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v});
    }
  }
  return Graph::from_edge_list(n, edges);
}

Graph random_gnm(std::size_t n, std::size_t m, std::uint64_t seed) {
  const std::size_t pairs = n < 2 ? 0 : n * (n - 1) / 2;
  if (m > pairs) m = pairs;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<VertexId> pick(0, n == 0 ? 0 : static_cast<VertexId>(n - 1));
  std::unordered_set<std::uint64_t> chosen;
  std::vector<Edge> edges;
  edges.reserve(m);
  while (edges.size() < m) {
    const Edge e = make_edge(pick(rng), pick(rng));
    if (e.u == e.v) continue;
    if (chosen.insert((std::uint64_t{e.u} << 32) | e.v).second) edges.push_back(e);
  }
  return Graph::from_edge_list(n, edges);
}

Graph grid_graph(std::size_t rows, std::size_t cols) {
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const auto v = static_cast<VertexId>(r * cols + c);
      if (c + 1 < cols) edges.push_back({v, v + 1});
      if (r + 1 < rows) edges.push_back({v, static_cast<VertexId>(v + cols)});
    }
  }
  return Graph::from_edge_list(rows * cols, edges);
}

}  // namespace mindeg
