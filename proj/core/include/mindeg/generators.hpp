#pragma once

#include <cstddef>
#include <cstdint>

#include "mindeg/graph.hpp"

namespace mindeg {

// Erdos-Renyi G(n, p) from a seeded std::mt19937_64.
Graph random_gnp(std::size_t n, double p, std::uint64_t seed);

// m distinct uniformly random edges (capped at n(n-1)/2).
Graph random_gnm(std::size_t n, std::size_t m, std::uint64_t seed);

// rows x cols 4-neighbor grid, vertex r * cols + c.
Graph grid_graph(std::size_t rows, std::size_t cols);

}  // namespace mindeg
