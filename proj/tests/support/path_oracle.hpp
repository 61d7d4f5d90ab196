#pragma once

// Test-only fill graph built by enumerating simple paths, kept independent of
// the component-based oracle it cross-checks. Exponential; use on n <= 10.

#include <set>
#include <span>
#include <vector>

#include "mindeg/graph.hpp"

namespace mindeg::test {

inline std::set<Edge> fill_edges_by_paths(const Graph& g, std::span<const VertexId> eliminated) {
  const std::size_t n = g.num_vertices();
  std::vector<bool> gone(n, false);
  for (VertexId v : eliminated) gone[v] = true;
  std::set<Edge> out;
  std::vector<bool> on_path(n, false);
  // Depth-first over simple paths whose interior is eliminated.
  auto walk = [&](auto&& self, VertexId source, VertexId x) -> void {
    for (VertexId y : g.neighbors(x)) {
      if (on_path[y]) continue;
      if (!gone[y]) {
        if (y != source) out.insert(make_edge(source, y));
        continue;
      }
      on_path[y] = true;
      self(self, source, y);
      on_path[y] = false;
    }
  };
  for (VertexId s = 0; s < n; ++s) {
    if (gone[s]) continue;
    on_path[s] = true;
    walk(walk, s, s);
    on_path[s] = false;
  }
  return out;
}

inline std::set<Edge> edge_set(const Graph& g) {
  const auto e = g.edges();
  return {e.begin(), e.end()};
}

}  // namespace mindeg::test
