#pragma once

// Adversarial U-filler constructions: graphs on U and fresh extra vertices W
// such that eliminating all of W leaves the complete graph on U, plus checkers
// for their properties and the clique-union decision procedure built on them.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "mindeg/graph.hpp"
#include "mindeg/oracle.hpp"
#include "mindeg/ordering.hpp"

namespace mindeg {

/// A graph whose non-isolated vertices are split into targets (u_set) and
/// extras (w_set). Both lists are sorted; extras get ids above every target.
struct LabeledGraph {
  Graph graph;
  std::vector<VertexId> u_set;
  std::vector<VertexId> w_set;
};

/// Path of |U| extras, the i-th extra matched to the i-th smallest member of U.
/// Throws InputError on an empty set.
LabeledGraph u_comb(std::span<const VertexId> u_set);

/// Union of (U_i + U_j)-combs over all pairs of parts, where U is cut in
/// ascending order into chunks of max(1, d/2) vertices; a single chunk yields
/// one comb. Throws InputError if d < 2 or U is empty.
LabeledGraph bounded_filler(std::span<const VertexId> u_set, std::size_t d);

/// Recursive construction: K_U when |U| <= 7, otherwise the union of fillers
/// for the lower and upper halves of U and a (floor(|U|/2) - 2)-bounded filler
/// tying them together. Throws InputError on an empty set.
LabeledGraph min_degree_filler(std::span<const VertexId> u_set);

/// Eliminating every extra yields exactly the complete graph on u_set.
bool is_filler(const LabeledGraph& lg);

struct SubsetCheckOptions {
  // Enumerate exhaustively when the subset space fits, otherwise draw this many
  // seeded random subsets.
  std::size_t budget = 500;
  std::uint64_t seed = 0x6d696e646567ULL;
};

/// Result of a subset search. A passing sampled search means no counterexample
/// was found, not that the property is proven.
struct PropertyVerdict {
  bool holds = true;
  bool exhaustive = false;
  std::size_t subsets_checked = 0;
  // On failure: the eliminated extras and a violating vertex.
  std::vector<VertexId> witness_subset;
  VertexId witness_vertex = 0;
  std::size_t witness_degree = 0;
};

/// After eliminating any proper subset X of the extras, every vertex of minimum
/// fill degree among U and the surviving extras is an extra. Exhaustive when
/// 2^|W| <= budget; otherwise seeded random subsets, every prefix of a greedy
/// minimum degree elimination, and every W minus one extra. A sampled pass is
/// upgraded to exhaustive when a degree-bound certificate covers all subsets:
/// every target's smallest possible fill degree exceeds the largest fill degree
/// any surviving extra can reach.
PropertyVerdict check_min_degree_property(const LabeledGraph& lg, const SubsetCheckOptions& options = {});

/// After eliminating any subset X of the extras, every surviving extra has fill
/// degree at most d. A surviving extra's degree depends only on X restricted to
/// its component among the extras, so the search is exhaustive whenever the
/// summed per-component subset counts fit the budget.
PropertyVerdict check_d_bounded(const LabeledGraph& lg, std::size_t d, const SubsetCheckOptions& options = {});

struct CliqueUnionInstance {
  std::size_t n = 0;
  std::vector<std::vector<VertexId>> subsets;
};

// Any function returning an exact minimum degree ordering.
using OrderingEngine = std::function<std::vector<VertexId>(const Graph&)>;

OrderingEngine fast_engine(const OrderingConfig& config = {});
OrderingEngine naive_engine(TieBreak rule = TieBreak::smallest_id, std::uint64_t seed = 0,
                            const oracle::OracleConfig& config = {});

/// The graph handed to the ordering engine by clique_union: the union of
/// min_degree_filler(U_i) over all nonempty subsets, with disjoint extras
/// numbered from n upward.
LabeledGraph clique_union_graph(const CliqueUnionInstance& instance);

/// Decides whether the cliques on the given subsets cover every pair of
/// [0, n) using one minimum degree ordering of clique_union_graph(instance).
/// Throws InputError if a subset mentions a vertex >= n.
bool clique_union(const CliqueUnionInstance& instance, const OrderingEngine& engine);

bool clique_union_bruteforce(const CliqueUnionInstance& instance);

}  // namespace mindeg
