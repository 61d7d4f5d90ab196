#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "mindeg/bounds.hpp"
#include "mindeg/errors.hpp"
#include "mindeg/generators.hpp"
#include "mindeg/io.hpp"
#include "mindeg/mindegree.hpp"
#include "mindeg/oracle.hpp"
#include "mindeg/ufiller.hpp"

namespace mindeg::cli {

namespace {

struct InputOptions {
  std::string path;
  std::string format = "auto";
  bool symmetrize = false;
};

struct OrderOptions {
  std::string backend = "auto";
  std::string tie_break = "smallest";
  std::optional<std::uint64_t> seed;
  std::size_t dense_limit = OrderingConfig{}.dense_limit;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("input", in.path, "Graph file")->required();
  cmd->add_option("--format", in.format, "Input format")
      ->check(CLI::IsMember({"auto", "mm", "edges"}));
  cmd->add_flag("--symmetrize", in.symmetrize,
                "Accept structurally unsymmetric general Matrix Market patterns");
}

void add_order_options(CLI::App* cmd, OrderOptions& o) {
  cmd->add_option("--backend", o.backend, "Fill-graph adjacency backend")
      ->check(CLI::IsMember({"dense", "sparse", "auto"}));
  cmd->add_option("--tie-break", o.tie_break, "Rule among minimum-degree vertices")
      ->check(CLI::IsMember({"smallest", "largest", "random"}));
  cmd->add_option("--seed", o.seed, "Seed for --tie-break random");
  cmd->add_option("--dense-limit", o.dense_limit, "Largest n for the dense backend");
}

Graph load_graph(const InputOptions& in, std::ostream& err) {
  std::string format = in.format;
  if (format == "auto") {
    const auto ext = std::filesystem::path(in.path).extension().string();
    format = (ext == ".mtx" || ext == ".mm") ? "mm" : "edges";
  }
  if (format == "mm") {
    io::MatrixMarketOptions mm;
    mm.symmetrize = in.symmetrize;
    mm.warn = [&err](std::string_view msg) { err << "warning: " << msg << '\n'; };
    return io::read_matrix_market(in.path, mm);
  }
  return io::read_edge_list(in.path);
}

TieBreak parse_tie_break(const std::string& s) {
  if (s == "largest") return TieBreak::largest_id;
  if (s == "random") return TieBreak::seeded_random;
  return TieBreak::smallest_id;
}

OrderingConfig make_config(const OrderOptions& o) {
  OrderingConfig config;
  config.backend = o.backend == "dense"    ? BackendKind::dense
                   : o.backend == "sparse" ? BackendKind::ordered_set
                                           : BackendKind::automatic;
  config.tie_break = parse_tie_break(o.tie_break);
  if (config.tie_break == TieBreak::seeded_random && !o.seed) {
    throw ConfigError("--tie-break random requires an explicit --seed");
  }
  config.seed = o.seed.value_or(0);
  config.dense_limit = o.dense_limit;
  return config;
}

struct TimedRun {
  EliminationResult result;
  double wall_ms = 0.0;
};

TimedRun timed_order(const Graph& g, const OrderingConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  TimedRun run{fast_minimum_degree(g, config), 0.0};
  const auto stop = std::chrono::steady_clock::now();
  run.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return run;
}

io::StatsFormat stats_format_for(const std::string& path, const std::string& requested) {
  if (requested == "tsv") return io::StatsFormat::tsv;
  if (requested == "json") return io::StatsFormat::json;
  return std::filesystem::path(path).extension() == ".tsv" ? io::StatsFormat::tsv : io::StatsFormat::json;
}

void report_violation(const oracle::OrderingVerdict& v, std::ostream& out) {
  out << "INVALID at step " << v.step << ": vertex " << v.eliminated << " has fill degree "
      << v.eliminated_degree << " but vertex " << v.witness << " has fill degree " << v.witness_degree
      << '\n';
}

// --- order ------------------------------------------------------------------

struct OrderCommand {
  InputOptions input;
  OrderOptions order;
  std::string out_path;
  std::string stats_path;
  std::string stats_format = "auto";
  bool self_check = false;

  int run(std::ostream& out, std::ostream& err) const {
    const OrderingConfig config = make_config(order);
    const Graph g = load_graph(input, err);
    const TimedRun run = timed_order(g, config);
    if (out_path.empty()) {
      for (VertexId v : run.result.ordering) out << v << '\n';
    } else {
      io::write_permutation(run.result.ordering, out_path);
    }
    if (!stats_path.empty()) {
      io::write_stats(io::make_run_stats(g, run.result, config.tie_break, run.wall_ms), stats_path,
                      stats_format_for(stats_path, stats_format));
    }
    if (self_check) {
      const auto verdict = oracle::verify_min_degree_ordering(
          g, run.result.ordering, {std::max(g.num_vertices(), oracle::OracleConfig{}.max_vertices)});
      if (!verdict.valid) {
        report_violation(verdict, err);
        return kSemanticFailure;
      }
      const auto bounds = evaluate_attempt_bounds(g, run.result);
      if (!bounds.all_hold()) {
        err << "insertion-attempt bound violated\n";
        return kSemanticFailure;
      }
    }
    return kSuccess;
  }
};

// --- verify -----------------------------------------------------------------

struct VerifyCommand {
  InputOptions input;
  std::string perm_path;
  std::string oracle_name = "naive";
  std::size_t max_vertices = oracle::OracleConfig{}.max_vertices;

  int run(std::ostream& out, std::ostream& err) const {
    const Graph g = load_graph(input, err);
    const auto ordering = io::read_permutation(perm_path);
    if (ordering.size() != g.num_vertices()) {
      throw InputError("permutation has " + std::to_string(ordering.size()) + " entries but the graph has " +
                       std::to_string(g.num_vertices()) + " vertices");
    }
    const auto verdict = oracle::verify_min_degree_ordering(g, ordering, {max_vertices});
    if (!verdict.valid) {
      report_violation(verdict, out);
      return kSemanticFailure;
    }
    out << "VALID\n";
    return kSuccess;
  }
};

// --- stats ------------------------------------------------------------------

struct StatsCommand {
  InputOptions input;
  OrderOptions order;
  std::string format = "json";

  int run(std::ostream& out, std::ostream& err) const {
    const OrderingConfig config = make_config(order);
    const Graph g = load_graph(input, err);
    const TimedRun run = timed_order(g, config);
    out << io::format_stats(io::make_run_stats(g, run.result, config.tie_break, run.wall_ms),
                            format == "tsv" ? io::StatsFormat::tsv : io::StatsFormat::json);
    return kSuccess;
  }
};

// --- gen-ufiller ------------------------------------------------------------

struct GenUFillerCommand {
  std::size_t size = 0;
  std::string kind = "mindeg";
  std::optional<std::size_t> d;
  std::string out_path;
  std::string labels_path;

  int run(std::ostream& out, std::ostream&) const {
    if (size == 0) throw InputError("--size must be at least 1");
    std::vector<VertexId> u(size);
    for (std::size_t i = 0; i < size; ++i) u[i] = static_cast<VertexId>(i);
    LabeledGraph lg;
    if (kind == "comb") {
      lg = u_comb(u);
    } else if (kind == "bounded") {
      if (!d) throw InputError("--kind bounded requires --d");
      lg = bounded_filler(u, *d);
    } else {
      lg = min_degree_filler(u);
    }
    if (out_path.empty()) {
      io::format_edge_list(lg.graph, out);
    } else {
      io::write_edge_list(lg.graph, out_path);
    }
    if (!labels_path.empty()) io::write_labels(lg, labels_path);
    return kSuccess;
  }
};

// --- clique-union -----------------------------------------------------------

struct CliqueUnionCommand {
  std::string instance_path;
  std::string engine = "fast";
  OrderOptions order;
  bool check = false;

  int run(std::ostream& out, std::ostream& err) const {
    const OrderingConfig config = make_config(order);
    const auto instance = io::read_clique_union_instance(instance_path);
    OrderingEngine ordering_engine;
    if (engine == "naive") {
      const std::size_t vertices = clique_union_graph(instance).graph.num_vertices();
      ordering_engine = naive_engine(config.tie_break, config.seed,
                                     {std::max(vertices, oracle::OracleConfig{}.max_vertices)});
    } else {
      ordering_engine = fast_engine(config);
    }
    const bool answer = clique_union(instance, ordering_engine);
    out << (answer ? "true" : "false") << '\n';
    if (check && answer != clique_union_bruteforce(instance)) {
      err << "reduction disagrees with brute force\n";
      return kSemanticFailure;
    }
    return kSuccess;
  }
};

// --- bench ------------------------------------------------------------------

struct BenchCommand {
  std::string suite = "random";
  std::vector<std::size_t> sizes;
  std::size_t repeats = 1;
  std::string out_path;
  std::uint64_t seed = 1;

  int run(std::ostream& out, std::ostream& err) const {
    std::ostringstream table;
    table << "suite\tsize\trepeat\tn\tm\tm_plus\tattempts\tsum_min_degree\tdelta_m_plus\t"
             "two_m_sqrt_two_m_plus\tn_times_m\twall_ms\n";
    bool ok = true;
    for (std::size_t size : sizes) {
      for (std::size_t r = 0; r < repeats; ++r) {
        Graph g;
        std::size_t target_edges = 0;
        if (suite == "grid") {
          g = grid_graph(size, size);
        } else if (suite == "ufiller") {
          if (size == 0) throw InputError("ufiller sizes must be at least 1");
          std::vector<VertexId> u(size);
          for (std::size_t i = 0; i < size; ++i) u[i] = static_cast<VertexId>(i);
          g = min_degree_filler(u).graph;
          target_edges = size * (size - 1) / 2;
        } else {
          g = random_gnm(size, 4 * size, seed + 7919 * r + size);
        }
        const TimedRun run = timed_order(g, OrderingConfig{});
        const AttemptBounds b = evaluate_attempt_bounds(g, run.result);
        table << suite << '\t' << size << '\t' << r << '\t' << g.num_vertices() << '\t' << g.num_edges() << '\t'
              << run.result.m_plus << '\t' << b.attempts << '\t' << b.sum_min_degree << '\t' << b.delta_m_plus
              << '\t' << b.two_m_sqrt_two_m_plus << '\t' << b.n_times_m << '\t' << run.wall_ms << '\n';
        if (!b.all_hold()) {
          err << suite << " size " << size << " repeat " << r << ": insertion attempts " << b.attempts
              << " exceed a bound\n";
          ok = false;
        }
        if (run.result.m_plus < target_edges) {
          err << suite << " size " << size << ": m+ " << run.result.m_plus << " below |U|(|U|-1)/2 = "
              << target_edges << '\n';
          ok = false;
        }
      }
    }
    if (out_path.empty()) {
      out << table.str();
    } else {
      std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
      if (!file) throw IoError("cannot open " + out_path + " for writing");
      file << table.str();
    }
    return ok ? kSuccess : kSemanticFailure;
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact minimum degree orderings, oracles and adversarial filler graphs", "mindeg"};
  app.require_subcommand(1);

  OrderCommand order;
  auto* order_cmd = app.add_subcommand("order", "Compute a minimum degree ordering");
  add_input_options(order_cmd, order.input);
  add_order_options(order_cmd, order.order);
  order_cmd->add_option("--out", order.out_path, "Permutation file (stdout if omitted)");
  order_cmd->add_option("--stats", order.stats_path, "Run statistics file (.json or .tsv)");
  order_cmd->add_option("--stats-format", order.stats_format)->check(CLI::IsMember({"auto", "json", "tsv"}));
  order_cmd->add_flag("--self-check", order.self_check, "Verify the ordering with the brute-force oracle");

  VerifyCommand verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check that a permutation is a minimum degree ordering");
  add_input_options(verify_cmd, verify.input);
  verify_cmd->add_option("perm", verify.perm_path, "Permutation file")->required();
  verify_cmd->add_option("--oracle", verify.oracle_name)->check(CLI::IsMember({"naive"}));
  verify_cmd->add_option("--max-vertices", verify.max_vertices, "Oracle size limit");

  StatsCommand stats;
  auto* stats_cmd = app.add_subcommand("stats", "Order a graph and print run statistics");
  add_input_options(stats_cmd, stats.input);
  add_order_options(stats_cmd, stats.order);
  stats_cmd->add_option("--stats-format", stats.format)->check(CLI::IsMember({"json", "tsv"}));

  GenUFillerCommand gen;
  auto* gen_cmd = app.add_subcommand("gen-ufiller", "Generate a U-filler graph on U = {0..size-1}");
  gen_cmd->add_option("--size", gen.size, "|U|")->required();
  gen_cmd->add_option("--kind", gen.kind)->check(CLI::IsMember({"comb", "bounded", "mindeg"}));
  gen_cmd->add_option("--d", gen.d, "Degree bound for --kind bounded");
  gen_cmd->add_option("--out", gen.out_path, "Edge-list file (stdout if omitted)");
  gen_cmd->add_option("--labels", gen.labels_path, "Label file marking U and W vertices");

  CliqueUnionCommand cu;
  auto* cu_cmd = app.add_subcommand("clique-union", "Decide a clique-union instance via minimum degree");
  cu_cmd->add_option("instance", cu.instance_path, "Instance file")->required();
  cu_cmd->add_option("--engine", cu.engine)->check(CLI::IsMember({"fast", "naive"}));
  add_order_options(cu_cmd, cu.order);
  cu_cmd->add_flag("--check", cu.check, "Cross-check against brute force");

  BenchCommand bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark suite and enforce attempt bounds");
  bench_cmd->add_option("--suite", bench.suite)->check(CLI::IsMember({"random", "grid", "ufiller"}));
  bench_cmd->add_option("--sizes", bench.sizes, "Comma-separated sizes")->delimiter(',');
  bench_cmd->add_option("--repeats", bench.repeats);
  bench_cmd->add_option("--out", bench.out_path, "TSV file (stdout if omitted)");
  bench_cmd->add_option("--seed", bench.seed);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (order_cmd->parsed()) return order.run(out, err);
    if (verify_cmd->parsed()) return verify.run(out, err);
    if (stats_cmd->parsed()) return stats.run(out, err);
    if (gen_cmd->parsed()) return gen.run(out, err);
    if (cu_cmd->parsed()) return cu.run(out, err);
    if (bench_cmd->parsed()) return bench.run(out, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kSemanticFailure;
  }
  return kUsageError;
}

}  // namespace mindeg::cli
