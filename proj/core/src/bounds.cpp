#include "mindeg/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace mindeg {

std::uint64_t sum_min_degree(const Graph& g, std::span<const Edge> fill_edges) {
  std::uint64_t total = 0;
  for (const Edge& e : fill_edges) total += std::min(g.degree(e.u), g.degree(e.v));
  return total;
}

AttemptBounds evaluate_attempt_bounds(const Graph& g, const EliminationResult& result) {
  __extension__ typedef unsigned __int128 u128;
  AttemptBounds b;
  const std::uint64_t m = g.num_edges();
  const std::uint64_t m_plus = result.m_plus;
  b.attempts = result.insertion_attempts;
  b.sum_min_degree = sum_min_degree(g, result.fill_edges);
  b.delta_m_plus = std::uint64_t{g.max_degree()} * m_plus;
  b.two_m_sqrt_two_m_plus = 2.0 * static_cast<double>(m) * std::sqrt(2.0 * static_cast<double>(m_plus));
  b.n_times_m = std::uint64_t{g.num_vertices()} * m;

  b.within_sum_min_degree = b.attempts <= b.sum_min_degree;
  b.within_delta_m_plus = b.attempts <= b.delta_m_plus;
  // k <= 2m sqrt(2 m+)  <=>  k^2 <= 8 m^2 m+
  const u128 k = b.attempts;
  b.within_two_m_sqrt = k * k <= u128{8} * m * m * m_plus;
  b.within_n_times_m = b.attempts <= b.n_times_m;
  return b;
}

}  // namespace mindeg
