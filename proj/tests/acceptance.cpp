// Acceptance suite: prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mindeg/bounds.hpp"
#include "mindeg/generators.hpp"
#include "mindeg/mindegree.hpp"
#include "mindeg/oracle.hpp"
#include "mindeg/ufiller.hpp"

using namespace mindeg;

namespace {

struct Outcome {
  int id;
  std::string name;
  bool pass;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

std::vector<VertexId> iota_set(std::size_t n) {
  std::vector<VertexId> u(n);
  std::iota(u.begin(), u.end(), 0u);
  return u;
}

// Every fast run in the suite feeds its attempt bounds here.
struct BoundsLedger {
  std::size_t runs = 0;
  std::size_t violations = 0;
  std::uint64_t worst_attempts = 0;

  void record(const Graph& g, const EliminationResult& r) {
    const AttemptBounds b = evaluate_attempt_bounds(g, r);
    ++runs;
    if (!b.all_hold()) ++violations;
    worst_attempts = std::max(worst_attempts, b.attempts);
  }
};

BoundsLedger bounds;

EliminationResult run_fast(const Graph& g, const OrderingConfig& config) {
  auto r = fast_minimum_degree(g, config);
  bounds.record(g, r);
  return r;
}

Outcome oracle_equivalence() {
  std::mt19937_64 rng(1001);
  std::size_t runs = 0, failures = 0;
  const auto start = Clock::now();
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + rng() % 49;
    const Graph g = random_gnp(n, uniform(rng, 0.0, 0.5), rng());
    const std::uint64_t seed = rng();
    for (BackendKind backend : {BackendKind::dense, BackendKind::ordered_set}) {
      for (TieBreak rule : {TieBreak::smallest_id, TieBreak::largest_id, TieBreak::seeded_random}) {
        OrderingConfig c;
        c.backend = backend;
        c.tie_break = rule;
        c.seed = seed;
        const auto r = run_fast(g, c);
        ++runs;
        const bool ok = oracle::verify_min_degree_ordering(g, r.ordering).valid &&
                        r.m_plus == oracle::fill_count_of_ordering(g, r.ordering);
        if (!ok) ++failures;
      }
    }
  }
  std::ostringstream d;
  d << runs << " runs, " << failures << " mismatches, " << static_cast<long>(ms_since(start)) << " ms";
  return {1, "oracle equivalence", failures == 0, d.str()};
}

template <typename Storage>
std::set<Edge> hypergraph_edges(const MinimumDegreeEngine<Storage>& engine) {
  std::set<Edge> out;
  const auto& store = engine.hyperedges();
  for (HyperedgeStore::Handle h = 0; h < store.size(); ++h) {
    if (!store.valid(h)) continue;
    const auto m = store.members(h);
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = i + 1; j < m.size(); ++j) out.insert(make_edge(m[i], m[j]));
    }
  }
  return out;
}

template <typename Storage>
std::size_t cross_check(const Graph& g, TieBreak rule, std::uint64_t seed, std::size_t& steps) {
  MinimumDegreeEngine<Storage> engine(g, rule, seed);
  std::vector<VertexId> eliminated;
  std::size_t mismatches = 0;
  while (!engine.finished()) {
    const VertexId a = engine.select_minimum_degree();
    engine.eliminate_vertex(a);
    eliminated.push_back(a);
    ++steps;
    const auto adjacency = engine.fill().edges();
    const std::set<Edge> explicit_edges(adjacency.begin(), adjacency.end());
    const auto reference = oracle::fill_graph(g, eliminated).edges();
    const std::set<Edge> oracle_edges(reference.begin(), reference.end());
    if (hypergraph_edges(engine) != explicit_edges || oracle_edges != explicit_edges) ++mismatches;
  }
  return mismatches;
}

Outcome hypergraph_cross_check() {
  std::mt19937_64 rng(2002);
  std::size_t steps = 0, mismatches = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 20;
    const Graph g = random_gnp(n, uniform(rng, 0.05, 0.6), rng());
    const std::uint64_t seed = rng();
    mismatches += cross_check<DenseStorage>(g, TieBreak::seeded_random, seed, steps);
    mismatches += cross_check<OrderedSetStorage>(g, TieBreak::smallest_id, seed, steps);
  }
  std::ostringstream d;
  d << steps << " steps compared, " << mismatches << " mismatches";
  return {2, "hypergraph/adjacency/oracle per-step equality", mismatches == 0, d.str()};
}

Outcome attempt_bounds() {
  std::mt19937_64 rng(3003);
  for (std::size_t side : {5, 10, 20, 40}) run_fast(grid_graph(side, side), {});
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 400;
    OrderingConfig c;
    c.backend = trial % 2 ? BackendKind::dense : BackendKind::ordered_set;
    c.tie_break = static_cast<TieBreak>(trial % 3);
    c.seed = rng();
    run_fast(random_gnm(n, std::min<std::size_t>(n * (n - 1) / 2, (1 + rng() % 8) * n), rng()), c);
  }
  std::ostringstream d;
  d << bounds.runs << " runs, " << bounds.violations << " violations, largest k = " << bounds.worst_attempts;
  return {3, "insertion-attempt bounds on every run", bounds.violations == 0, d.str()};
}

Outcome filler_correctness() {
  std::ostringstream d;
  bool pass = true;
  std::size_t exhaustive_sizes = 0;
  auto check = [&](std::size_t size, bool must_be_exhaustive) {
    const auto lg = min_degree_filler(iota_set(size));
    const SubsetCheckOptions options{500, 0x5eed + size};
    const bool filler = is_filler(lg);
    const auto md = check_min_degree_property(lg, options);
    const auto bd = check_d_bounded(lg, std::max<std::size_t>(size, 3) - 3, options);
    bool ok = filler && md.holds && bd.holds;
    if (must_be_exhaustive) {
      ok = ok && md.exhaustive && bd.exhaustive;
      if (md.exhaustive && bd.exhaustive) ++exhaustive_sizes;
    }
    if (!ok) {
      d << " |U|=" << size << " failed (filler " << filler << ", min-degree " << md.holds << "/" << md.exhaustive
        << ", bounded " << bd.holds << "/" << bd.exhaustive << ");";
    }
    pass = pass && ok;
  };
  for (std::size_t size = 1; size <= 10; ++size) check(size, true);
  for (std::size_t size : {16, 32, 64}) check(size, false);
  d << " " << exhaustive_sizes << "/10 small sizes exhaustive, 16/32/64 sampled with 500 subsets";
  return {4, "min-degree filler correctness", pass, d.str().substr(1)};
}

Outcome sparsity_scaling() {
  std::ostringstream d;
  double edge_c = 0, degree_c = 0;
  bool pass = true;
  d.precision(3);
  for (std::size_t size = 8; size <= 256; size *= 2) {
    const Graph g = min_degree_filler(iota_set(size)).graph;
    const double scale = 1.0 + std::log2(static_cast<double>(size));
    const double edges = static_cast<double>(g.num_edges()) / (static_cast<double>(size) * scale);
    const double degree = static_cast<double>(g.max_degree()) / scale;
    if (size == 8) {
      edge_c = edges;
      degree_c = degree;
    }
    if (edges > 2 * edge_c || degree > 2 * degree_c) pass = false;
    d << (size == 8 ? "" : ", ") << size << ":" << edges << "/" << degree;
  }
  std::ostringstream head;
  head.precision(3);
  head << "edge and degree ratios within 2x of |U|=8 values (" << edge_c << ", " << degree_c << "): " << d.str();
  return {5, "filler sparsity scaling", pass, head.str()};
}

Outcome worst_case_fill() {
  const auto lg = min_degree_filler(iota_set(256));
  const auto start = Clock::now();
  const auto r = run_fast(lg.graph, {});
  const double wall = ms_since(start);
  const std::size_t w = lg.w_set.size();
  const bool extras_first = std::all_of(r.ordering.begin(), r.ordering.begin() + static_cast<std::ptrdiff_t>(w),
                                        [](VertexId v) { return v >= 256; });
  std::ostringstream d;
  d << "n = " << lg.graph.num_vertices() << ", m+ = " << r.m_plus << " (need 32640), extras first: "
    << (extras_first ? "yes" : "no") << ", " << static_cast<long>(wall) << " ms";
  return {6, "worst-case fill on the 256-target filler", r.m_plus >= 32640 && extras_first, d.str()};
}

Outcome reduction_agreement() {
  std::mt19937_64 rng(7007);
  std::size_t disagreements = 0, yes = 0;
  const auto start = Clock::now();
  for (int trial = 0; trial < 500; ++trial) {
    CliqueUnionInstance inst;
    inst.n = 1 + rng() % 32;
    const std::size_t d = 1 + rng() % 8;
    std::bernoulli_distribution take(uniform(rng, 0.2, 0.9));
    for (std::size_t i = 0; i < d; ++i) {
      auto& s = inst.subsets.emplace_back();
      for (VertexId v = 0; v < inst.n; ++v) {
        if (take(rng)) s.push_back(v);
      }
    }
    const bool expected = clique_union_bruteforce(inst);
    yes += expected;
    const std::size_t vertices = clique_union_graph(inst).graph.num_vertices();
    const oracle::OracleConfig cap{std::max(vertices, oracle::OracleConfig{}.max_vertices)};
    if (clique_union(inst, fast_engine()) != expected) ++disagreements;
    if (clique_union(inst, naive_engine(TieBreak::smallest_id, 0, cap)) != expected) ++disagreements;
  }
  std::ostringstream d;
  d << "500 instances (" << yes << " yes), " << disagreements << " disagreements, "
    << static_cast<long>(ms_since(start)) << " ms";
  return {7, "clique-union reduction agreement", disagreements == 0, d.str()};
}

Outcome orientation() {
  std::mt19937_64 rng(8008);
  std::size_t violations = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 200;
    const Graph g = random_gnp(n, uniform(rng, 0.0, 0.6), rng());
    const auto o = oracle::orient_bounded_outdegree(g);
    const std::uint64_t limit = 2 * g.num_edges();
    bool ok = o.arcs.size() == g.num_edges();
    for (std::size_t out : o.out_degree) ok = ok && std::uint64_t{out} * out <= limit;
    if (!ok) ++violations;
  }
  std::ostringstream d;
  d << "200 graphs, " << violations << " violations of outdeg^2 <= 2m";
  return {8, "bounded out-degree orientation", violations == 0, d.str()};
}

Outcome scaling_smoke() {
  std::ostringstream d;
  bool pass = true;
  double previous = 0;
  d.precision(3);
  for (std::size_t n : {1000, 2000, 4000, 8000}) {
    const Graph g = random_gnm(n, 4 * n, 9000 + n);
    const auto start = Clock::now();
    const auto r = run_fast(g, {});
    const double wall = ms_since(start);
    const AttemptBounds b = evaluate_attempt_bounds(g, r);
    pass = pass && b.within_n_times_m;
    d << (n == 1000 ? "" : "; ") << "n=" << n << " k=" << b.attempts << " nm=" << b.n_times_m << " "
      << wall << " ms";
    if (previous > 0) d << " (x" << wall / previous << ")";
    previous = wall;
  }
  return {9, "scaling smoke k <= n*m", pass, d.str()};
}

}  // namespace

int main() {
  std::vector<Outcome> outcomes;
  outcomes.push_back(oracle_equivalence());
  outcomes.push_back(hypergraph_cross_check());
  outcomes.push_back(filler_correctness());
  outcomes.push_back(sparsity_scaling());
  outcomes.push_back(worst_case_fill());
  outcomes.push_back(reduction_agreement());
  outcomes.push_back(orientation());
  outcomes.push_back(scaling_smoke());
  outcomes.push_back(attempt_bounds());
  std::sort(outcomes.begin(), outcomes.end(), [](const Outcome& a, const Outcome& b) { return a.id < b.id; });

  bool all = true;
  for (const auto& o : outcomes) {
    std::printf("%s [%d] %s: %s\n", o.pass ? "PASS" : "FAIL", o.id, o.name.c_str(), o.detail.c_str());
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
