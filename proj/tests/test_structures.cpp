#include <doctest.h>

#include <random>

#include "mindeg/bucket_queue.hpp"
#include "mindeg/epoch_array.hpp"
#include "mindeg/errors.hpp"
#include "mindeg/fill_adjacency.hpp"
#include "mindeg/hyperedge_store.hpp"

using namespace mindeg;

TEST_CASE("bucket queue selects the minimum degree") {
  BucketQueue q(3);
  q.insert(0, 2);
  q.insert(1, 1);
  q.insert(2, 1);
  CHECK(q.select(TieBreak::smallest_id) == 1);
  CHECK(q.select(TieBreak::largest_id) == 2);

  q.update(1, 2);
  CHECK(q.select(TieBreak::smallest_id) == 2);

  q.erase(0);
  q.erase(1);
  q.erase(2);
  CHECK(q.empty());
  CHECK_THROWS_AS(q.select(TieBreak::smallest_id), StateError);
}

TEST_CASE("bucket queue rejects double insertion and unknown erasure") {
  BucketQueue q(2);
  q.insert(0, 0);
  CHECK_THROWS_AS(q.insert(0, 1), StateError);
  CHECK_THROWS_AS(q.erase(1), StateError);
}

TEST_CASE("bucket queue agrees with a linear scan under random updates") {
  std::mt19937_64 rng(3);
  const std::size_t n = 40;
  BucketQueue q(n);
  std::vector<std::size_t> key(n);
  std::vector<bool> present(n, true);
  for (VertexId v = 0; v < n; ++v) {
    key[v] = rng() % n;
    q.insert(v, key[v]);
  }
  std::mt19937_64 pick_rng(99);
  for (int step = 0; step < 2000 && !q.empty(); ++step) {
    const VertexId v = static_cast<VertexId>(rng() % n);
    if (present[v]) {
      if (rng() % 5 == 0) {
        q.erase(v);
        present[v] = false;
      } else {
        key[v] = rng() % n;
        q.update(v, key[v]);
      }
    }
    if (q.empty()) break;
    std::size_t best = n;
    VertexId lo = 0;
    VertexId hi = 0;
    for (VertexId u = 0; u < n; ++u) {
      if (!present[u]) continue;
      if (key[u] < best) {
        best = key[u];
        lo = hi = u;
      } else if (key[u] == best) {
        hi = u;
      }
    }
    CHECK(q.min_key() == best);
    CHECK(q.select(TieBreak::smallest_id) == lo);
    CHECK(q.select(TieBreak::largest_id) == hi);
    CHECK(key[q.select(TieBreak::seeded_random, &pick_rng)] == best);
  }
}

TEST_CASE("epoch array clears in O(1)") {
  EpochArray a(4);
  a.insert(1);
  a.insert(3);
  CHECK(a.contains(1));
  CHECK_FALSE(a.contains(2));
  a.clear();
  CHECK_FALSE(a.contains(1));
  CHECK_FALSE(a.contains(3));
  a.insert(2);
  CHECK(a.contains(2));
}

TEST_CASE("hyperedge store keeps stale handles in incidence lists") {
  HyperedgeStore store(4);
  const VertexId e0[] = {0, 1};
  const VertexId e1[] = {1, 2, 3};
  const auto h0 = store.add(e0);
  const auto h1 = store.add(e1);
  CHECK(store.num_valid() == 2);
  CHECK(store.incident(1).size() == 2);
  store.invalidate(h0);
  CHECK_FALSE(store.valid(h0));
  CHECK(store.valid(h1));
  CHECK(store.incident(1).size() == 2);
  CHECK(store.num_valid() == 1);
  store.invalidate(h0);
  CHECK(store.num_valid() == 1);
  CHECK(store.members(h1).size() == 3);
}

TEST_CASE_TEMPLATE("attempt_insert counts every attempt", Storage, DenseStorage, OrderedSetStorage) {
  const std::vector<Edge> edges{{0, 1}};
  FillAdjacency<Storage> fill(Graph::from_edge_list(3, edges));
  CHECK(fill.fill_degree(0) == 1);

  CHECK(fill.attempt_insert(1, 2));
  CHECK(fill.fill_degree(1) == 2);
  CHECK(fill.fill_degree(2) == 1);

  CHECK_FALSE(fill.attempt_insert(0, 1));
  CHECK(fill.fill_degree(0) == 1);

  CHECK_FALSE(fill.attempt_insert(2, 1));
  CHECK(fill.insertion_attempts() == 3);
  CHECK(fill.insertions() == 1);
  CHECK(fill.has_edge(2, 1));

  fill.remove_edge(0, 1);
  CHECK_FALSE(fill.has_edge(1, 0));
  CHECK(fill.fill_degree(0) == 0);
  CHECK(fill.edges() == std::vector<Edge>{{1, 2}});
}
