#include "mindeg/oracle.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "mindeg/errors.hpp"

namespace mindeg::oracle {

namespace {

struct Components {
  // component id per eliminated vertex, -1 for survivors
  std::vector<std::int64_t> label;
  // surviving neighbors of each component, deduplicated
  std::vector<std::vector<VertexId>> boundary;
};

Components eliminated_components(const Graph& g, std::span<const std::uint8_t> mask) {
  const std::size_t n = g.num_vertices();
  Components c;
  c.label.assign(n, -1);
  std::vector<std::size_t> seen(n, 0);  // boundary dedup, stamped with component id + 1
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < n; ++s) {
    if (!mask[s] || c.label[s] >= 0) continue;
    const auto id = static_cast<std::int64_t>(c.boundary.size());
    auto& boundary = c.boundary.emplace_back();
    c.label[s] = id;
    stack.assign(1, s);
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      for (VertexId y : g.neighbors(x)) {
        if (mask[y]) {
          if (c.label[y] < 0) {
            c.label[y] = id;
            stack.push_back(y);
          }
        } else if (seen[y] != static_cast<std::size_t>(id) + 1) {
          seen[y] = static_cast<std::size_t>(id) + 1;
          boundary.push_back(y);
        }
      }
    }
    std::sort(boundary.begin(), boundary.end());
  }
  return c;
}

std::vector<std::uint8_t> mask_of(const Graph& g, std::span<const VertexId> eliminated) {
  std::vector<std::uint8_t> mask(g.num_vertices(), 0);
  for (VertexId v : eliminated) {
    if (v >= g.num_vertices()) {
      throw InputError("eliminated vertex " + std::to_string(v) + " outside [0, " +
                       std::to_string(g.num_vertices()) + ")");
    }
    mask[v] = 1;
  }
  return mask;
}

void require_permutation(std::size_t n, std::span<const VertexId> ordering) {
  if (ordering.size() != n) {
    throw InputError("ordering has " + std::to_string(ordering.size()) + " entries, expected " +
                     std::to_string(n));
  }
  std::vector<std::uint8_t> seen(n, 0);
  for (VertexId v : ordering) {
    if (v >= n || seen[v]) {
      throw InputError("ordering is not a permutation (entry " + std::to_string(v) + ")");
    }
    seen[v] = 1;
  }
}

void require_size(std::size_t n, const OracleConfig& config) {
  if (n > config.max_vertices) {
    throw ConfigError("oracle limited to " + std::to_string(config.max_vertices) +
                      " vertices, graph has " + std::to_string(n));
  }
}

}  // namespace

Graph fill_graph(const Graph& g, std::span<const VertexId> eliminated) {
  const auto mask = mask_of(g, eliminated);
  const Components c = eliminated_components(g, mask);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (!mask[e.u] && !mask[e.v]) edges.push_back(e);
  }
  for (const auto& boundary : c.boundary) {
    for (std::size_t i = 0; i < boundary.size(); ++i) {
      for (std::size_t j = i + 1; j < boundary.size(); ++j) edges.push_back({boundary[i], boundary[j]});
    }
  }
  return Graph::from_edge_list(g.num_vertices(), edges);
}

std::vector<std::size_t> fill_degrees(const Graph& g, std::span<const std::uint8_t> eliminated_mask) {
  const std::size_t n = g.num_vertices();
  if (eliminated_mask.size() != n) throw InputError("mask size does not match the graph");
  const Components c = eliminated_components(g, eliminated_mask);
  std::vector<std::size_t> degree(n, 0);
  std::vector<std::size_t> stamp(n, 0);
  std::vector<std::size_t> comp_stamp(c.boundary.size(), 0);
  for (VertexId v = 0; v < n; ++v) {
    if (eliminated_mask[v]) continue;
    const std::size_t tag = std::size_t{v} + 1;
    stamp[v] = tag;
    std::size_t count = 0;
    for (VertexId y : g.neighbors(v)) {
      if (!eliminated_mask[y]) {
        if (stamp[y] != tag) {
          stamp[y] = tag;
          ++count;
        }
        continue;
      }
      const auto comp = static_cast<std::size_t>(c.label[y]);
      if (comp_stamp[comp] == tag) continue;
      comp_stamp[comp] = tag;
      for (VertexId b : c.boundary[comp]) {
        if (stamp[b] != tag) {
          stamp[b] = tag;
          ++count;
        }
      }
    }
    degree[v] = count;
  }
  return degree;
}

ExplicitElimination::ExplicitElimination(const Graph& g)
    : n_(g.num_vertices()),
      matrix_(n_ * n_, 0),
      degree_(n_, 0),
      active_(n_, 1),
      num_active_(n_) {
  for (const Edge& e : g.edges()) {
    matrix_[std::size_t{e.u} * n_ + e.v] = 1;
    matrix_[std::size_t{e.v} * n_ + e.u] = 1;
    ++degree_[e.u];
    ++degree_[e.v];
  }
}

std::size_t ExplicitElimination::min_active_degree() const {
  std::size_t best = n_;
  for (std::size_t v = 0; v < n_; ++v) {
    if (active_[v]) best = std::min(best, degree_[v]);
  }
  if (best == n_) throw StateError("no active vertices");
  return best;
}

std::vector<VertexId> ExplicitElimination::active_neighbors(VertexId v) const {
  std::vector<VertexId> out;
  const std::uint8_t* row = matrix_.data() + std::size_t{v} * n_;
  for (std::size_t u = 0; u < n_; ++u) {
    if (row[u]) out.push_back(static_cast<VertexId>(u));
  }
  return out;
}

std::uint64_t ExplicitElimination::eliminate(VertexId v, std::vector<Edge>* inserted) {
  if (v >= n_ || !active_[v]) throw StateError("vertex " + std::to_string(v) + " is not active");
  const std::vector<VertexId> nbrs = active_neighbors(v);
  std::uint64_t examined = 0;
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      ++examined;
      const VertexId a = nbrs[i];
      const VertexId b = nbrs[j];
      std::uint8_t& cell = matrix_[std::size_t{a} * n_ + b];
      if (cell) continue;
      cell = 1;
      matrix_[std::size_t{b} * n_ + a] = 1;
      ++degree_[a];
      ++degree_[b];
      if (inserted != nullptr) inserted->push_back({a, b});
    }
  }
  for (VertexId u : nbrs) {
    matrix_[std::size_t{u} * n_ + v] = 0;
    matrix_[std::size_t{v} * n_ + u] = 0;
    --degree_[u];
  }
  degree_[v] = 0;
  active_[v] = 0;
  --num_active_;
  return examined;
}

EliminationResult naive_minimum_degree(const Graph& g, TieBreak rule, std::uint64_t seed,
                                       const OracleConfig& config) {
  const std::size_t n = g.num_vertices();
  require_size(n, config);
  ExplicitElimination state(g);
  std::mt19937_64 rng(seed);
  EliminationResult out;
  out.backend_used = BackendKind::naive;
  out.fill_edges = g.edges();
  std::vector<VertexId> candidates;
  while (state.num_active() > 0) {
    const std::size_t best = state.min_active_degree();
    candidates.clear();
    for (VertexId v = 0; v < n; ++v) {
      if (state.active(v) && state.degree(v) == best) candidates.push_back(v);
    }
    VertexId pick = candidates.front();
    if (rule == TieBreak::largest_id) {
      pick = candidates.back();
    } else if (rule == TieBreak::seeded_random) {
      std::uniform_int_distribution<std::size_t> draw(0, candidates.size() - 1);
      pick = candidates[draw(rng)];
    }
    out.ordering.push_back(pick);
    out.eliminated_degrees.push_back(best);
    out.insertion_attempts += state.eliminate(pick, &out.fill_edges);
  }
  for (Edge& e : out.fill_edges) e = make_edge(e.u, e.v);
  std::sort(out.fill_edges.begin(), out.fill_edges.end());
  out.m_plus = out.fill_edges.size();
  return out;
}

OrderingVerdict verify_min_degree_ordering(const Graph& g, std::span<const VertexId> ordering,
                                           const OracleConfig& config) {
  const std::size_t n = g.num_vertices();
  require_permutation(n, ordering);
  require_size(n, config);
  ExplicitElimination state(g);
  for (std::size_t i = 0; i < ordering.size(); ++i) {
    const VertexId a = ordering[i];
    const std::size_t best = state.min_active_degree();
    if (state.degree(a) != best) {
      OrderingVerdict verdict;
      verdict.valid = false;
      verdict.step = i + 1;
      verdict.eliminated = a;
      verdict.eliminated_degree = state.degree(a);
      for (VertexId w = 0; w < n; ++w) {
        if (state.active(w) && state.degree(w) == best) {
          verdict.witness = w;
          break;
        }
      }
      verdict.witness_degree = best;
      return verdict;
    }
    state.eliminate(a);
  }
  return {};
}

std::size_t fill_count_of_ordering(const Graph& g, std::span<const VertexId> ordering,
                                   const OracleConfig& config) {
  require_permutation(g.num_vertices(), ordering);
  require_size(g.num_vertices(), config);
  ExplicitElimination state(g);
  std::vector<Edge> inserted;
  for (VertexId v : ordering) state.eliminate(v, &inserted);
  return g.num_edges() + inserted.size();
}

std::size_t Orientation::max_out_degree() const noexcept {
  return out_degree.empty() ? 0 : *std::max_element(out_degree.begin(), out_degree.end());
}

Orientation orient_bounded_outdegree(const Graph& g) {
  Orientation o;
  o.out_degree.assign(g.num_vertices(), 0);
  o.arcs.reserve(g.num_edges());
  for (const Edge& e : g.edges()) {
    const std::size_t du = g.degree(e.u);
    const std::size_t dv = g.degree(e.v);
    const bool u_first = du < dv || (du == dv && e.u < e.v);
    const Arc arc = u_first ? Arc{e.u, e.v} : Arc{e.v, e.u};
    o.arcs.push_back(arc);
    ++o.out_degree[arc.tail];
  }
  return o;
}

}  // namespace mindeg::oracle
