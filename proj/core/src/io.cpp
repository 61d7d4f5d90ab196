#include "mindeg/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "mindeg/errors.hpp"

namespace mindeg::io {

namespace {

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  return out;
}

void finish_output(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::uint64_t parse_unsigned(std::string_view token, std::size_t line_no) {
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size()) {
    throw ParseError("expected a non-negative integer, got '" + std::string(token) + "'", line_no);
  }
  return value;
}

void parse_real(std::string_view token, std::size_t line_no) {
  double value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size()) {
    throw ParseError("expected a numeric value, got '" + std::string(token) + "'", line_no);
  }
}

VertexId to_vertex(std::uint64_t value, std::size_t line_no) {
  if (value >= std::numeric_limits<VertexId>::max()) throw ParseError("vertex id too large", line_no);
  return static_cast<VertexId>(value);
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

}  // namespace

Graph parse_matrix_market(std::istream& in, const MatrixMarketOptions& options) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw ParseError("empty file, expected a %%MatrixMarket banner", 1);
  ++line_no;
  const auto banner = split(line);
  if (banner.empty() || lower(banner[0]) != "%%matrixmarket") {
    throw ParseError("missing %%MatrixMarket banner", line_no);
  }
  if (banner.size() != 5) throw ParseError("banner needs object, format, field and symmetry", line_no);
  if (lower(banner[1]) != "matrix") {
    throw UnsupportedFormatError("unsupported object '" + std::string(banner[1]) + "'", line_no);
  }
  if (lower(banner[2]) != "coordinate") {
    throw UnsupportedFormatError("unsupported format '" + std::string(banner[2]) +
                                     "', only coordinate is supported",
                                 line_no);
  }
  const std::string field = lower(banner[3]);
  std::size_t value_tokens = 0;
  if (field == "pattern") {
    value_tokens = 0;
  } else if (field == "real" || field == "integer" || field == "double") {
    value_tokens = 1;
  } else if (field == "complex") {
    value_tokens = 2;
  } else {
    throw ParseError("unknown field '" + std::string(banner[3]) + "'", line_no);
  }
  const std::string symmetry = lower(banner[4]);
  const bool general = symmetry == "general";
  if (!general && symmetry != "symmetric" && symmetry != "skew-symmetric" && symmetry != "hermitian") {
    throw ParseError("unknown symmetry '" + std::string(banner[4]) + "'", line_no);
  }

  std::uint64_t rows = 0;
  std::uint64_t cols = 0;
  std::uint64_t nnz = 0;
  bool have_size = false;
  std::vector<Edge> entries;
  std::uint64_t seen = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split(line);
    if (tokens.empty() || tokens[0].front() == '%') continue;
    if (!have_size) {
      if (tokens.size() != 3) throw ParseError("size line must be 'rows cols entries'", line_no);
      rows = parse_unsigned(tokens[0], line_no);
      cols = parse_unsigned(tokens[1], line_no);
      nnz = parse_unsigned(tokens[2], line_no);
      if (rows != cols) {
        throw ParseError("matrix is " + std::to_string(rows) + " x " + std::to_string(cols) +
                             ", expected a square pattern",
                         line_no);
      }
      if (rows >= std::numeric_limits<VertexId>::max()) throw ParseError("dimension too large", line_no);
      have_size = true;
      entries.reserve(nnz);
      continue;
    }
    if (tokens.size() != 2 + value_tokens) {
      throw ParseError("expected " + std::to_string(2 + value_tokens) + " fields, got " +
                           std::to_string(tokens.size()),
                       line_no);
    }
    const std::uint64_t i = parse_unsigned(tokens[0], line_no);
    const std::uint64_t j = parse_unsigned(tokens[1], line_no);
    for (std::size_t t = 2; t < tokens.size(); ++t) parse_real(tokens[t], line_no);
    if (i < 1 || i > rows || j < 1 || j > cols) {
      throw ParseError("entry (" + std::to_string(i) + ", " + std::to_string(j) +
                           ") outside the declared " + std::to_string(rows) + " x " +
                           std::to_string(cols) + " matrix",
                       line_no);
    }
    if (++seen > nnz) throw ParseError("more entries than the declared " + std::to_string(nnz), line_no);
    entries.push_back({static_cast<VertexId>(i - 1), static_cast<VertexId>(j - 1)});
  }
  if (!have_size) throw ParseError("missing size line", line_no);
  if (seen != nnz) {
    throw ParseError("declared " + std::to_string(nnz) + " entries, found " + std::to_string(seen), line_no);
  }

  if (general) {
    std::vector<Edge> directed;
    for (const Edge& e : entries) {
      if (e.u != e.v) directed.push_back(e);
    }
    std::sort(directed.begin(), directed.end());
    directed.erase(std::unique(directed.begin(), directed.end()), directed.end());
    std::size_t missing = 0;
    for (const Edge& e : directed) {
      if (!std::binary_search(directed.begin(), directed.end(), Edge{e.v, e.u})) ++missing;
    }
    if (missing > 0) {
      if (!options.symmetrize) {
        throw ValidationError("general matrix is not structurally symmetric (" + std::to_string(missing) +
                              " entries lack a transpose); pass symmetrize to accept it");
      }
      if (options.warn) {
        options.warn("symmetrized pattern: added " + std::to_string(missing) + " transposed entries");
      }
    }
  }
  return Graph::from_edge_list(rows, entries);
}

Graph read_matrix_market(const std::filesystem::path& path, const MatrixMarketOptions& options) {
  auto in = open_input(path);
  return parse_matrix_market(in, options);
}

Graph parse_edge_list(std::istream& in) {
  struct Pair {
    std::uint64_t a, b;
    std::size_t line;
  };
  std::vector<Pair> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split(strip_comment(line));
    if (tokens.empty()) continue;
    if (tokens.size() != 2) throw ParseError("expected 'u v', got " + std::to_string(tokens.size()) + " fields", line_no);
    pairs.push_back({parse_unsigned(tokens[0], line_no), parse_unsigned(tokens[1], line_no), line_no});
  }

  bool header = false;
  if (!pairs.empty() && pairs.size() - 1 == pairs.front().b) {
    header = std::all_of(pairs.begin() + 1, pairs.end(), [&](const Pair& p) {
      return p.a < pairs.front().a && p.b < pairs.front().a;
    });
  }

  std::uint64_t n = 0;
  std::vector<Edge> edges;
  for (std::size_t k = header ? 1 : 0; k < pairs.size(); ++k) {
    const VertexId u = to_vertex(pairs[k].a, pairs[k].line);
    const VertexId v = to_vertex(pairs[k].b, pairs[k].line);
    n = std::max<std::uint64_t>(n, std::uint64_t{std::max(u, v)} + 1);
    edges.push_back({u, v});
  }
  if (header) {
    if (pairs.front().a >= std::numeric_limits<VertexId>::max()) throw ParseError("vertex count too large", pairs.front().line);
    n = pairs.front().a;
  }
  return Graph::from_edge_list(n, edges);
}

Graph read_edge_list(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_edge_list(in);
}

void format_edge_list(const Graph& g, std::ostream& out) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_edge_list(const Graph& g, const std::filesystem::path& path) {
  auto out = open_output(path);
  format_edge_list(g, out);
  finish_output(out, path);
}

void write_permutation(std::span<const VertexId> ordering, const std::filesystem::path& path) {
  auto out = open_output(path);
  for (VertexId v : ordering) out << v << '\n';
  finish_output(out, path);
}

std::vector<VertexId> parse_permutation(std::istream& in) {
  std::vector<VertexId> ordering;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 1) throw ParseError("expected one vertex id per line", line_no);
    ordering.push_back(to_vertex(parse_unsigned(tokens[0], line_no), line_no));
  }
  std::vector<std::uint8_t> seen(ordering.size(), 0);
  for (VertexId v : ordering) {
    if (v >= ordering.size()) {
      throw ValidationError("id " + std::to_string(v) + " out of range for a permutation of " +
                            std::to_string(ordering.size()) + " entries");
    }
    if (seen[v]) throw ValidationError("duplicate id " + std::to_string(v) + " in permutation");
    seen[v] = 1;
  }
  return ordering;
}

std::vector<VertexId> read_permutation(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_permutation(in);
}

RunStats make_run_stats(const Graph& g, const EliminationResult& result, TieBreak rule, double wall_ms) {
  RunStats s;
  s.n = g.num_vertices();
  s.m = g.num_edges();
  s.m_plus = result.m_plus;
  s.insertion_attempts = result.insertion_attempts;
  s.max_degree = g.max_degree();
  s.backend = std::string(to_string(result.backend_used));
  s.tie_break = std::string(to_string(rule));
  s.wall_ms = wall_ms;
  for (std::size_t d : result.eliminated_degrees) {
    if (d >= s.degree_histogram.size()) s.degree_histogram.resize(d + 1, 0);
    ++s.degree_histogram[d];
  }
  return s;
}

std::string format_stats(const RunStats& stats, StatsFormat format) {
  if (format == StatsFormat::json) {
    nlohmann::ordered_json j;
    j["n"] = stats.n;
    j["m"] = stats.m;
    j["m_plus"] = stats.m_plus;
    j["insertion_attempts"] = stats.insertion_attempts;
    j["max_degree"] = stats.max_degree;
    j["backend"] = stats.backend;
    j["tie_break"] = stats.tie_break;
    j["wall_ms"] = stats.wall_ms;
    j["degree_histogram"] = stats.degree_histogram;
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  for (std::size_t c = 0; c < std::size(kStatsColumns); ++c) out << (c ? "\t" : "") << kStatsColumns[c];
  out << '\n';
  char wall[64];
  const auto res = std::to_chars(std::begin(wall), std::end(wall), stats.wall_ms);
  out << stats.n << '\t' << stats.m << '\t' << stats.m_plus << '\t' << stats.insertion_attempts << '\t'
      << stats.max_degree << '\t' << stats.backend << '\t' << stats.tie_break << '\t'
      << std::string_view(wall, static_cast<std::size_t>(res.ptr - wall)) << '\t';
  for (std::size_t d = 0; d < stats.degree_histogram.size(); ++d) out << (d ? "," : "") << stats.degree_histogram[d];
  out << '\n';
  return out.str();
}

void write_stats(const RunStats& stats, const std::filesystem::path& path, StatsFormat format) {
  auto out = open_output(path);
  out << format_stats(stats, format);
  finish_output(out, path);
}

RunStats parse_stats_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    RunStats s;
    s.n = j.at("n").get<std::uint64_t>();
    s.m = j.at("m").get<std::uint64_t>();
    s.m_plus = j.at("m_plus").get<std::uint64_t>();
    s.insertion_attempts = j.at("insertion_attempts").get<std::uint64_t>();
    s.max_degree = j.at("max_degree").get<std::uint64_t>();
    s.backend = j.at("backend").get<std::string>();
    s.tie_break = j.at("tie_break").get<std::string>();
    s.wall_ms = j.at("wall_ms").get<double>();
    s.degree_histogram = j.at("degree_histogram").get<std::vector<std::uint64_t>>();
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid stats json: ") + e.what(), 0);
  }
}

void format_labels(const LabeledGraph& lg, std::ostream& out) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < lg.u_set.size() || j < lg.w_set.size()) {
    if (j == lg.w_set.size() || (i < lg.u_set.size() && lg.u_set[i] < lg.w_set[j])) {
      out << lg.u_set[i++] << " U\n";
    } else {
      out << lg.w_set[j++] << " W\n";
    }
  }
}

void write_labels(const LabeledGraph& lg, const std::filesystem::path& path) {
  auto out = open_output(path);
  format_labels(lg, out);
  finish_output(out, path);
}

CliqueUnionInstance parse_clique_union_instance(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  CliqueUnionInstance instance;
  std::vector<std::string_view> tokens;
  while (std::getline(in, line)) {
    ++line_no;
    tokens = split(line);
    if (!tokens.empty()) break;
  }
  if (tokens.size() != 2) throw ParseError("expected header 'n d'", line_no);
  instance.n = parse_unsigned(tokens[0], line_no);
  const std::uint64_t d = parse_unsigned(tokens[1], line_no);
  if (instance.n >= std::numeric_limits<VertexId>::max()) throw ParseError("n too large", line_no);
  for (std::uint64_t k = 0; k < d; ++k) {
    if (!std::getline(in, line)) {
      throw ParseError("expected " + std::to_string(d) + " subset lines, found " + std::to_string(k), line_no);
    }
    ++line_no;
    auto& subset = instance.subsets.emplace_back();
    for (auto token : split(line)) {
      const std::uint64_t v = parse_unsigned(token, line_no);
      if (v >= instance.n) {
        throw ParseError("vertex " + std::to_string(v) + " outside [0, " + std::to_string(instance.n) + ")", line_no);
      }
      subset.push_back(static_cast<VertexId>(v));
    }
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (!split(line).empty()) throw ParseError("unexpected content after the last subset", line_no);
  }
  return instance;
}

CliqueUnionInstance read_clique_union_instance(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_clique_union_instance(in);
}

void format_clique_union_instance(const CliqueUnionInstance& instance, std::ostream& out) {
  out << instance.n << ' ' << instance.subsets.size() << '\n';
  for (const auto& subset : instance.subsets) {
    for (std::size_t i = 0; i < subset.size(); ++i) out << (i ? " " : "") << subset[i];
    out << '\n';
  }
}

}  // namespace mindeg::io
