#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "mindeg/errors.hpp"
#include "mindeg/generators.hpp"
#include "mindeg/oracle.hpp"
#include "support/path_oracle.hpp"

using namespace mindeg;
using namespace mindeg::oracle;

namespace {

Graph path3() {
  const std::vector<Edge> e{{0, 1}, {1, 2}};
  return Graph::from_edge_list(3, e);
}

Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (VertexId v = 0; v < n; ++v) e.push_back({v, static_cast<VertexId>((v + 1) % n)});
  return Graph::from_edge_list(n, e);
}

Graph star5() {
  const std::vector<Edge> e{{0, 4}, {1, 4}, {2, 4}, {3, 4}};
  return Graph::from_edge_list(5, e);
}

std::vector<VertexId> random_subset(std::size_t n, std::mt19937_64& rng) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < n; ++v) {
    if (rng() % 2) out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("fill_graph examples") {
  const VertexId middle[] = {1};
  const Graph f = fill_graph(path3(), middle);
  CHECK(f.edges() == std::vector<Edge>{{0, 2}});

  CHECK(fill_graph(path3(), {}) == path3());

  // Pinned by simple-path enumeration: 4-0-1-2 joins 2 and 4.
  const VertexId two[] = {0, 1};
  CHECK(fill_graph(cycle(5), two).edges() == std::vector<Edge>{{2, 3}, {2, 4}, {3, 4}});

  const VertexId bad[] = {7};
  CHECK_THROWS_AS(fill_graph(path3(), bad), InputError);
}

TEST_CASE("fill_graph matches simple-path enumeration") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    const Graph g = random_gnp(n, 0.15 + 0.5 * (rng() % 100) / 100.0, rng());
    const auto eliminated = random_subset(n, rng);
    CHECK(test::edge_set(fill_graph(g, eliminated)) == test::fill_edges_by_paths(g, eliminated));

    std::vector<std::uint8_t> mask(n, 0);
    for (VertexId v : eliminated) mask[v] = 1;
    const auto degrees = fill_degrees(g, mask);
    const Graph f = fill_graph(g, eliminated);
    for (VertexId v = 0; v < n; ++v) CHECK(degrees[v] == f.degree(v));
  }
}

TEST_CASE("fill_graph does not depend on the elimination order") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 18;
    const Graph g = random_gnp(n, 0.25, rng());
    auto u = random_subset(n, rng);
    const Graph direct = fill_graph(g, u);
    for (int order = 0; order < 2; ++order) {
      std::shuffle(u.begin(), u.end(), rng);
      Graph step = g;
      for (VertexId v : u) {
        const VertexId one[] = {v};
        step = fill_graph(step, one);
      }
      CHECK(step == direct);
    }
  }
}

TEST_CASE("fill_graph composes") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 18;
    const Graph g = random_gnp(n, 0.3, rng());
    auto u = random_subset(n, rng);
    const VertexId v = static_cast<VertexId>(rng() % n);
    u.erase(std::remove(u.begin(), u.end(), v), u.end());
    const VertexId one[] = {v};
    auto with_v = u;
    with_v.push_back(v);
    CHECK(fill_graph(fill_graph(g, one), u) == fill_graph(g, with_v));
  }
}

TEST_CASE("naive_minimum_degree examples") {
  const auto p3 = naive_minimum_degree(path3(), TieBreak::smallest_id);
  CHECK(p3.ordering == std::vector<VertexId>{0, 1, 2});
  CHECK(p3.m_plus == 2);

  // Hand simulation: eliminating 0 adds {1,3}; every later step has degree <= 2.
  const auto c4 = naive_minimum_degree(cycle(4), TieBreak::smallest_id);
  CHECK(c4.ordering == std::vector<VertexId>{0, 1, 2, 3});
  CHECK(c4.eliminated_degrees == std::vector<std::size_t>{2, 2, 1, 0});
  CHECK(c4.m_plus == 5);

  const std::vector<VertexId> all{0, 1, 2, 3};
  const auto k4 = naive_minimum_degree(complete_graph(all, 4), TieBreak::smallest_id);
  CHECK(k4.ordering == std::vector<VertexId>{0, 1, 2, 3});
  CHECK(k4.eliminated_degrees == std::vector<std::size_t>{3, 2, 1, 0});
  CHECK(k4.m_plus == 6);

  const auto largest = naive_minimum_degree(path3(), TieBreak::largest_id);
  CHECK(largest.ordering == std::vector<VertexId>{2, 1, 0});
}

TEST_CASE("naive_minimum_degree respects the configured size cap") {
  OracleConfig tiny;
  tiny.max_vertices = 2;
  CHECK_THROWS_AS(naive_minimum_degree(path3(), TieBreak::smallest_id, 0, tiny), ConfigError);
}

TEST_CASE("naive orderings always verify") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_gnp(1 + rng() % 30, 0.2, rng());
    for (TieBreak rule : {TieBreak::smallest_id, TieBreak::largest_id, TieBreak::seeded_random}) {
      const auto r = naive_minimum_degree(g, rule, rng());
      CHECK(verify_min_degree_ordering(g, r.ordering).valid);
      CHECK(fill_count_of_ordering(g, r.ordering) == r.m_plus);
    }
  }
}

TEST_CASE("verify_min_degree_ordering reports the first violation") {
  const VertexId good[] = {0, 1, 2};
  CHECK(verify_min_degree_ordering(path3(), good).valid);

  const VertexId bad[] = {1, 0, 2};
  const auto v = verify_min_degree_ordering(path3(), bad);
  CHECK_FALSE(v.valid);
  CHECK(v.step == 1);
  CHECK(v.eliminated == 1);
  CHECK(v.eliminated_degree == 2);
  CHECK(v.witness == 0);
  CHECK(v.witness_degree == 1);

  const VertexId reversed[] = {4, 3, 2, 1, 0};
  const auto s = verify_min_degree_ordering(star5(), reversed);
  CHECK_FALSE(s.valid);
  CHECK(s.step == 1);

  const VertexId dup[] = {0, 0, 2};
  CHECK_THROWS_AS(verify_min_degree_ordering(path3(), dup), InputError);
  const VertexId short_perm[] = {0, 1};
  CHECK_THROWS_AS(verify_min_degree_ordering(path3(), short_perm), InputError);
}

TEST_CASE("fill_count_of_ordering") {
  const VertexId natural[] = {0, 1, 2};
  CHECK(fill_count_of_ordering(path3(), natural) == 2);

  const VertexId c4[] = {0, 1, 2, 3};
  CHECK(fill_count_of_ordering(cycle(4), c4) == 5);

  const VertexId center_first[] = {4, 0, 1, 2, 3};
  CHECK(fill_count_of_ordering(star5(), center_first) == 10);

  const VertexId bad[] = {0, 1, 1};
  CHECK_THROWS_AS(fill_count_of_ordering(path3(), bad), InputError);
}

TEST_CASE("orient_bounded_outdegree") {
  const auto star = orient_bounded_outdegree(star5());
  CHECK(star.arcs.size() == 4);
  for (const Arc& a : star.arcs) CHECK(a.head == 4);
  CHECK(star.max_out_degree() == 1);

  const std::vector<VertexId> all{0, 1, 2, 3};
  const auto k4 = orient_bounded_outdegree(complete_graph(all, 4));
  CHECK(k4.max_out_degree() <= 3);
  CHECK(k4.max_out_degree() * k4.max_out_degree() <= 2 * 6);

  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_gnp(20, 0.3, rng());
    const auto o = orient_bounded_outdegree(g);
    CHECK(o.arcs.size() == g.num_edges());
    for (const Arc& a : o.arcs) CHECK(g.degree(a.tail) <= g.degree(a.head));
    for (std::size_t d : o.out_degree) CHECK(d * d <= 2 * g.num_edges());
  }
}
