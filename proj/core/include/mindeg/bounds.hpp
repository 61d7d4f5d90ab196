#pragma once

#include <cstdint>
#include <span>

#include "mindeg/graph.hpp"
#include "mindeg/ordering.hpp"

namespace mindeg {

/// Upper bounds on the number of insertion attempts of one run, evaluated
/// with input-graph degrees:
///   sum_min_degree   = sum over {u,v} in E+ of min(deg(u), deg(v))
///   delta_m_plus     = max_degree * m+
///   two_m_sqrt       = 2m * sqrt(2 m+), compared exactly in integers
///   n_times_m        = n * m
struct AttemptBounds {
  std::uint64_t attempts = 0;
  std::uint64_t sum_min_degree = 0;
  std::uint64_t delta_m_plus = 0;
  double two_m_sqrt_two_m_plus = 0.0;
  std::uint64_t n_times_m = 0;

  bool within_sum_min_degree = false;
  bool within_delta_m_plus = false;
  bool within_two_m_sqrt = false;
  bool within_n_times_m = false;

  bool all_hold() const noexcept {
    return within_sum_min_degree && within_delta_m_plus && within_two_m_sqrt && within_n_times_m;
  }
};

std::uint64_t sum_min_degree(const Graph& g, std::span<const Edge> fill_edges);

AttemptBounds evaluate_attempt_bounds(const Graph& g, const EliminationResult& result);

}  // namespace mindeg
