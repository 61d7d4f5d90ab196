#pragma once

// Readers and writers for sparsity patterns, permutations, run statistics and
// clique-union instances. Readers reject malformed input with ParseError
// (carrying the 1-based line) instead of guessing.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mindeg/graph.hpp"
#include "mindeg/ordering.hpp"
#include "mindeg/ufiller.hpp"

namespace mindeg::io {

struct MatrixMarketOptions {
  // Accept structurally unsymmetric `general` patterns by adding the missing
  // transposed entries. When false such files are rejected.
  bool symmetrize = false;
  // Receives warnings (e.g. about symmetrization). Ignored when empty.
  std::function<void(std::string_view)> warn;
};

/// Pattern of a square `%%MatrixMarket matrix coordinate` file. Values are
/// parsed for well-formedness and discarded; 1-based indices become 0-based
/// vertex ids and the diagonal is dropped.
Graph read_matrix_market(const std::filesystem::path& path, const MatrixMarketOptions& options = {});
Graph parse_matrix_market(std::istream& in, const MatrixMarketOptions& options = {});

/// Edge list: one `u v` pair of 0-based ids per line, `#` starts a comment.
/// The first pair is read as an `n m` header when exactly m pairs follow and
/// all of them lie in [0, n); otherwise it is an edge and n = max id + 1.
Graph read_edge_list(const std::filesystem::path& path);
Graph parse_edge_list(std::istream& in);
// Always writes the `n m` header, then edges in sorted order.
void write_edge_list(const Graph& g, const std::filesystem::path& path);
void format_edge_list(const Graph& g, std::ostream& out);

/// One 0-based id per line. Reading throws ValidationError unless the ids form
/// a permutation of [0, count).
void write_permutation(std::span<const VertexId> ordering, const std::filesystem::path& path);
std::vector<VertexId> read_permutation(const std::filesystem::path& path);
std::vector<VertexId> parse_permutation(std::istream& in);

struct RunStats {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t m_plus = 0;
  std::uint64_t insertion_attempts = 0;
  std::uint64_t max_degree = 0;
  std::string backend;
  std::string tie_break;
  double wall_ms = 0.0;
  // histogram[d] = number of steps that eliminated a vertex of fill degree d
  std::vector<std::uint64_t> degree_histogram;

  friend bool operator==(const RunStats&, const RunStats&) = default;
};

RunStats make_run_stats(const Graph& g, const EliminationResult& result, TieBreak rule, double wall_ms);

enum class StatsFormat { json, tsv };

// Column order of the TSV form (also the JSON key order).
inline constexpr std::string_view kStatsColumns[] = {
    "n", "m", "m_plus", "insertion_attempts", "max_degree",
    "backend", "tie_break", "wall_ms", "degree_histogram"};

std::string format_stats(const RunStats& stats, StatsFormat format);
void write_stats(const RunStats& stats, const std::filesystem::path& path, StatsFormat format);
RunStats parse_stats_json(std::string_view text);

/// `<id> U` or `<id> W` per labeled vertex, ascending id.
void write_labels(const LabeledGraph& lg, const std::filesystem::path& path);
void format_labels(const LabeledGraph& lg, std::ostream& out);

/// First line `n d`, then d lines of space-separated vertex ids (a line may be
/// empty for an empty subset).
CliqueUnionInstance read_clique_union_instance(const std::filesystem::path& path);
CliqueUnionInstance parse_clique_union_instance(std::istream& in);
void format_clique_union_instance(const CliqueUnionInstance& instance, std::ostream& out);

}  // namespace mindeg::io
