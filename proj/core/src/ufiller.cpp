#include "mindeg/ufiller.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <random>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "mindeg/errors.hpp"
#include "mindeg/mindegree.hpp"

namespace mindeg {

namespace {

std::vector<VertexId> normalized(std::span<const VertexId> u_set) {
  std::vector<VertexId> u(u_set.begin(), u_set.end());
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  if (u.empty()) throw InputError("target set U must be nonempty");
  return u;
}

// Accumulates edges of several fillers; every extra vertex is fresh.
class FillerBuilder {
 public:
  explicit FillerBuilder(VertexId first_extra) : next_(first_extra) {}

  void comb(std::span<const VertexId> u) {
    VertexId previous = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
      const VertexId w = fresh();
      edges_.push_back({u[i], w});
      if (i > 0) edges_.push_back({previous, w});
      previous = w;
    }
  }

  void clique(std::span<const VertexId> u) {
    for (std::size_t i = 0; i < u.size(); ++i) {
      for (std::size_t j = i + 1; j < u.size(); ++j) edges_.push_back({u[i], u[j]});
    }
  }

  void bounded(std::span<const VertexId> u, std::size_t d) {
    const std::size_t part = std::max<std::size_t>(1, d / 2);
    std::vector<std::span<const VertexId>> parts;
    for (std::size_t start = 0; start < u.size(); start += part) {
      parts.push_back(u.subspan(start, std::min(part, u.size() - start)));
    }
    if (parts.size() == 1) {
      comb(u);
      return;
    }
    std::vector<VertexId> merged;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (std::size_t j = i + 1; j < parts.size(); ++j) {
        merged.assign(parts[i].begin(), parts[i].end());
        merged.insert(merged.end(), parts[j].begin(), parts[j].end());
        comb(merged);
      }
    }
  }

  void min_degree(std::span<const VertexId> u) {
    if (u.size() <= 7) {
      clique(u);
      return;
    }
    const std::size_t half = u.size() / 2;
    min_degree(u.first(half));
    min_degree(u.subspan(half));
    bounded(u, half - 2);
  }

  LabeledGraph finish(std::vector<VertexId> u_set, std::size_t min_vertices = 0) && {
    LabeledGraph lg;
    lg.graph = Graph::from_edge_list(std::max<std::size_t>(next_, min_vertices), edges_);
    lg.u_set = std::move(u_set);
    lg.w_set = std::move(extras_);
    return lg;
  }

 private:
  VertexId fresh() {
    extras_.push_back(next_);
    return next_++;
  }

  VertexId next_;
  std::vector<Edge> edges_;
  std::vector<VertexId> extras_;
};

// Greedy minimum degree elimination of the extras, reporting fill degrees of
// U and surviving extras before each step. Stops early when `visit` returns false.
template <typename Visit>
void greedy_extra_prefixes(const LabeledGraph& lg, Visit&& visit) {
  oracle::ExplicitElimination state(lg.graph);
  std::vector<VertexId> eliminated;
  for (std::size_t step = 0; step < lg.w_set.size(); ++step) {
    if (!visit(state, eliminated)) return;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    VertexId pick = 0;
    for (VertexId w : lg.w_set) {
      if (state.active(w) && state.degree(w) < best) {
        best = state.degree(w);
        pick = w;
      }
    }
    state.eliminate(pick);
    eliminated.push_back(pick);
  }
  visit(state, eliminated);
}

struct SubsetSampler {
  explicit SubsetSampler(std::uint64_t seed) : rng(seed) {}

  std::vector<std::uint8_t> draw(const LabeledGraph& lg, bool proper) {
    std::vector<std::uint8_t> mask(lg.graph.num_vertices(), 0);
    const double p = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    std::bernoulli_distribution take(p);
    std::size_t taken = 0;
    for (VertexId w : lg.w_set) {
      if (take(rng)) {
        mask[w] = 1;
        ++taken;
      }
    }
    if (proper && taken == lg.w_set.size() && !lg.w_set.empty()) {
      std::uniform_int_distribution<std::size_t> which(0, lg.w_set.size() - 1);
      mask[lg.w_set[which(rng)]] = 0;
    }
    return mask;
  }

  std::mt19937_64 rng;
};

std::vector<VertexId> subset_of(const LabeledGraph& lg, std::span<const std::uint8_t> mask) {
  std::vector<VertexId> out;
  for (VertexId w : lg.w_set) {
    if (mask[w]) out.push_back(w);
  }
  return out;
}

// Fails when some target has fill degree <= every surviving extra.
bool min_degree_holds(const LabeledGraph& lg, std::span<const std::uint8_t> mask, PropertyVerdict& verdict) {
  const auto degree = oracle::fill_degrees(lg.graph, mask);
  std::size_t min_extra = std::numeric_limits<std::size_t>::max();
  for (VertexId w : lg.w_set) {
    if (!mask[w]) min_extra = std::min(min_extra, degree[w]);
  }
  for (VertexId u : lg.u_set) {
    if (degree[u] <= min_extra) {
      verdict.holds = false;
      verdict.witness_subset = subset_of(lg, mask);
      verdict.witness_vertex = u;
      verdict.witness_degree = degree[u];
      return false;
    }
  }
  return true;
}

bool bounded_holds(const LabeledGraph& lg, std::span<const std::uint8_t> mask, std::size_t d,
                   PropertyVerdict& verdict) {
  const auto degree = oracle::fill_degrees(lg.graph, mask);
  for (VertexId w : lg.w_set) {
    if (!mask[w] && degree[w] > d) {
      verdict.holds = false;
      verdict.witness_subset = subset_of(lg, mask);
      verdict.witness_vertex = w;
      verdict.witness_degree = degree[w];
      return false;
    }
  }
  return true;
}

// Connected components of the subgraph induced by the extras.
std::vector<std::vector<VertexId>> extra_components(const LabeledGraph& lg) {
  std::vector<std::uint8_t> is_extra(lg.graph.num_vertices(), 0);
  for (VertexId w : lg.w_set) is_extra[w] = 1;
  std::vector<std::uint8_t> seen(lg.graph.num_vertices(), 0);
  std::vector<std::vector<VertexId>> comps;
  std::vector<VertexId> stack;
  for (VertexId s : lg.w_set) {
    if (seen[s]) continue;
    auto& comp = comps.emplace_back();
    seen[s] = 1;
    stack.assign(1, s);
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (VertexId y : lg.graph.neighbors(x)) {
        if (is_extra[y] && !seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
  }
  return comps;
}

constexpr std::size_t kCertificateWork = std::size_t{1} << 22;

bool fits(std::size_t bits, std::size_t budget) {
  return bits < 63 && (std::size_t{1} << bits) <= budget;
}

// Largest fill degree a surviving extra of `comp` can reach. Its reach never
// leaves comp and the targets adjacent to comp, so small components are
// enumerated and larger ones fall back to that size bound.
std::size_t max_extra_degree(const LabeledGraph& lg, const std::vector<VertexId>& comp,
                             std::size_t targets_adjacent) {
  constexpr std::size_t kEnumerateLimit = 12;
  if (comp.size() > kEnumerateLimit) return comp.size() - 1 + targets_adjacent;
  const std::size_t k = comp.size();
  std::unordered_map<VertexId, std::size_t> local;
  for (std::size_t i = 0; i < k; ++i) local.emplace(comp[i], i);
  std::size_t best = 0;
  std::vector<std::uint8_t> seen;
  std::vector<VertexId> stack;
  std::unordered_set<VertexId> reached;
  for (std::uint32_t bits = 0; bits < (1U << k); ++bits) {
    for (std::size_t i = 0; i < k; ++i) {
      if ((bits >> i) & 1U) continue;
      seen.assign(k, 0);
      reached.clear();
      seen[i] = 1;
      stack.assign(1, comp[i]);
      while (!stack.empty()) {
        const VertexId x = stack.back();
        stack.pop_back();
        for (VertexId y : lg.graph.neighbors(x)) {
          const auto it = local.find(y);
          if (it == local.end()) {
            reached.insert(y);
          } else if (!seen[it->second]) {
            seen[it->second] = 1;
            if ((bits >> it->second) & 1U) {
              stack.push_back(y);
            } else {
              reached.insert(y);
            }
          }
        }
      }
      best = std::max(best, reached.size());
    }
  }
  return best;
}

using TargetBits = std::vector<std::uint64_t>;

// Smallest value of |direct ∪ R_K over fully eliminated K| plus one surviving
// extra per other incident component, searched over which components are full.
// Stops as soon as the value drops to `floor` or below.
std::size_t target_degree_lower_bound(const TargetBits& direct, const std::vector<const TargetBits*>& reach,
                                      std::size_t floor) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  auto count = [](const TargetBits& b) {
    std::size_t c = 0;
    for (std::uint64_t word : b) c += static_cast<std::size_t>(std::popcount(word));
    return c;
  };
  auto search = [&](auto&& self, std::size_t index, const TargetBits& acc, std::size_t partial) -> void {
    if (best <= floor) return;
    if (index == reach.size()) {
      best = std::min(best, count(acc) + partial);
      return;
    }
    self(self, index + 1, acc, partial + 1);
    TargetBits next = acc;
    for (std::size_t i = 0; i < next.size(); ++i) next[i] |= (*reach[index])[i];
    self(self, index + 1, next, partial);
  };
  search(search, 0, direct, 0);
  return best;
}

// Proves the min-degree property for every proper subset at once: each target
// keeps its direct target neighbors, and every incident extra component either
// still holds a surviving extra or has been eliminated entirely. Returns false
// when the bound is inconclusive or the search would exceed `work_limit`.
bool certify_min_degree(const LabeledGraph& lg, const std::vector<std::vector<VertexId>>& comps,
                        std::size_t work_limit) {
  const std::size_t n = lg.graph.num_vertices();
  std::vector<std::size_t> target_index(n, std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 0; i < lg.u_set.size(); ++i) target_index[lg.u_set[i]] = i;
  const std::size_t words = (lg.u_set.size() + 63) / 64;
  auto set_bit = [](TargetBits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); };

  std::vector<std::size_t> comp_of(n, std::numeric_limits<std::size_t>::max());
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (VertexId x : comps[c]) comp_of[x] = c;
  }
  std::vector<TargetBits> reach(comps.size(), TargetBits(words, 0));
  std::size_t extra_ceiling = 0;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    std::size_t adjacent = 0;
    for (VertexId x : comps[c]) {
      for (VertexId y : lg.graph.neighbors(x)) {
        const std::size_t t = target_index[y];
        if (t == std::numeric_limits<std::size_t>::max()) continue;
        if (!(reach[c][t / 64] >> (t % 64) & 1U)) ++adjacent;
        set_bit(reach[c], t);
      }
    }
    extra_ceiling = std::max(extra_ceiling, max_extra_degree(lg, comps[c], adjacent));
  }

  std::size_t work = 0;
  for (VertexId u : lg.u_set) {
    TargetBits direct(words, 0);
    std::vector<std::size_t> incident;
    for (VertexId y : lg.graph.neighbors(u)) {
      if (target_index[y] != std::numeric_limits<std::size_t>::max()) {
        set_bit(direct, target_index[y]);
      } else if (comp_of[y] != std::numeric_limits<std::size_t>::max()) {
        incident.push_back(comp_of[y]);
      }
    }
    std::sort(incident.begin(), incident.end());
    incident.erase(std::unique(incident.begin(), incident.end()), incident.end());
    if (incident.size() >= 40) return false;
    work += std::size_t{1} << incident.size();
    if (work > work_limit) return false;

    const std::size_t self = target_index[u];
    std::vector<TargetBits> trimmed;
    trimmed.reserve(incident.size());
    for (std::size_t c : incident) {
      trimmed.push_back(reach[c]);
      trimmed.back()[self / 64] &= ~(std::uint64_t{1} << (self % 64));
    }
    std::vector<const TargetBits*> views;
    for (const auto& t : trimmed) views.push_back(&t);
    if (target_degree_lower_bound(direct, views, extra_ceiling) <= extra_ceiling) return false;
  }
  return true;
}

}  // namespace

LabeledGraph u_comb(std::span<const VertexId> u_set) {
  auto u = normalized(u_set);
  FillerBuilder builder(u.back() + 1);
  builder.comb(u);
  return std::move(builder).finish(std::move(u));
}

LabeledGraph bounded_filler(std::span<const VertexId> u_set, std::size_t d) {
  if (d < 2) throw InputError("bounded filler needs d >= 2, got " + std::to_string(d));
  auto u = normalized(u_set);
  FillerBuilder builder(u.back() + 1);
  builder.bounded(u, d);
  return std::move(builder).finish(std::move(u));
}

LabeledGraph min_degree_filler(std::span<const VertexId> u_set) {
  auto u = normalized(u_set);
  FillerBuilder builder(u.back() + 1);
  builder.min_degree(u);
  return std::move(builder).finish(std::move(u), std::size_t{u.back()} + 1);
}

bool is_filler(const LabeledGraph& lg) {
  return oracle::fill_graph(lg.graph, lg.w_set) == complete_graph(lg.u_set, lg.graph.num_vertices());
}

PropertyVerdict check_min_degree_property(const LabeledGraph& lg, const SubsetCheckOptions& options) {
  PropertyVerdict verdict;
  const std::size_t w = lg.w_set.size();
  if (w == 0) {
    verdict.exhaustive = true;
    return verdict;
  }
  std::vector<std::uint8_t> mask(lg.graph.num_vertices(), 0);
  if (fits(w, options.budget)) {
    verdict.exhaustive = true;
    const std::uint64_t full = (std::uint64_t{1} << w) - 1;
    for (std::uint64_t bits = 0; bits < full; ++bits) {
      for (std::size_t i = 0; i < w; ++i) mask[lg.w_set[i]] = (bits >> i) & 1U;
      ++verdict.subsets_checked;
      if (!min_degree_holds(lg, mask, verdict)) return verdict;
    }
    return verdict;
  }

  SubsetSampler sampler(options.seed);
  for (std::size_t s = 0; s < options.budget; ++s) {
    ++verdict.subsets_checked;
    if (!min_degree_holds(lg, sampler.draw(lg, true), verdict)) return verdict;
  }

  for (VertexId keep : lg.w_set) {
    std::fill(mask.begin(), mask.end(), 0);
    for (VertexId x : lg.w_set) mask[x] = 1;
    mask[keep] = 0;
    ++verdict.subsets_checked;
    if (!min_degree_holds(lg, mask, verdict)) return verdict;
  }

  greedy_extra_prefixes(lg, [&](const oracle::ExplicitElimination& state, const std::vector<VertexId>& x) {
    if (x.size() == w) return false;
    ++verdict.subsets_checked;
    std::size_t min_extra = std::numeric_limits<std::size_t>::max();
    for (VertexId e : lg.w_set) {
      if (state.active(e)) min_extra = std::min(min_extra, state.degree(e));
    }
    for (VertexId u : lg.u_set) {
      if (state.degree(u) <= min_extra) {
        verdict.holds = false;
        verdict.witness_subset = x;
        std::sort(verdict.witness_subset.begin(), verdict.witness_subset.end());
        verdict.witness_vertex = u;
        verdict.witness_degree = state.degree(u);
        return false;
      }
    }
    return true;
  });
  if (verdict.holds && certify_min_degree(lg, extra_components(lg), kCertificateWork)) verdict.exhaustive = true;
  return verdict;
}

PropertyVerdict check_d_bounded(const LabeledGraph& lg, std::size_t d, const SubsetCheckOptions& options) {
  PropertyVerdict verdict;
  const auto comps = extra_components(lg);
  std::size_t total = 0;
  bool exhaustive = true;
  for (const auto& comp : comps) {
    if (!fits(comp.size(), options.budget)) {
      exhaustive = false;
      break;
    }
    total += std::size_t{1} << comp.size();
    if (total > options.budget) {
      exhaustive = false;
      break;
    }
  }

  std::vector<std::uint8_t> mask(lg.graph.num_vertices(), 0);
  if (exhaustive) {
    verdict.exhaustive = true;
    for (const auto& comp : comps) {
      const std::uint64_t count = std::uint64_t{1} << comp.size();
      for (std::uint64_t bits = 0; bits < count; ++bits) {
        for (std::size_t i = 0; i < comp.size(); ++i) mask[comp[i]] = (bits >> i) & 1U;
        ++verdict.subsets_checked;
        if (!bounded_holds(lg, mask, d, verdict)) return verdict;
      }
      for (VertexId x : comp) mask[x] = 0;
    }
    return verdict;
  }

  SubsetSampler sampler(options.seed);
  for (std::size_t s = 0; s < options.budget; ++s) {
    ++verdict.subsets_checked;
    if (!bounded_holds(lg, sampler.draw(lg, false), d, verdict)) return verdict;
  }

  greedy_extra_prefixes(lg, [&](const oracle::ExplicitElimination& state, const std::vector<VertexId>& x) {
    ++verdict.subsets_checked;
    for (VertexId e : lg.w_set) {
      if (state.active(e) && state.degree(e) > d) {
        verdict.holds = false;
        verdict.witness_subset = x;
        std::sort(verdict.witness_subset.begin(), verdict.witness_subset.end());
        verdict.witness_vertex = e;
        verdict.witness_degree = state.degree(e);
        return false;
      }
    }
    return true;
  });
  return verdict;
}

OrderingEngine fast_engine(const OrderingConfig& config) {
  return [config](const Graph& g) { return fast_minimum_degree(g, config).ordering; };
}

OrderingEngine naive_engine(TieBreak rule, std::uint64_t seed, const oracle::OracleConfig& config) {
  return [rule, seed, config](const Graph& g) {
    return oracle::naive_minimum_degree(g, rule, seed, config).ordering;
  };
}

LabeledGraph clique_union_graph(const CliqueUnionInstance& instance) {
  const std::size_t n = instance.n;
  FillerBuilder builder(static_cast<VertexId>(n));
  for (const auto& subset : instance.subsets) {
    for (VertexId v : subset) {
      if (v >= n) {
        throw InputError("subset vertex " + std::to_string(v) + " outside [0, " + std::to_string(n) + ")");
      }
    }
    std::vector<VertexId> u(subset.begin(), subset.end());
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    if (!u.empty()) builder.min_degree(u);
  }
  std::vector<VertexId> targets(n);
  for (std::size_t v = 0; v < n; ++v) targets[v] = static_cast<VertexId>(v);
  return std::move(builder).finish(std::move(targets), n);
}

bool clique_union(const CliqueUnionInstance& instance, const OrderingEngine& engine) {
  const LabeledGraph lg = clique_union_graph(instance);
  const std::size_t n = instance.n;
  if (n == 0) return true;
  const std::size_t extras = lg.w_set.size();
  const std::vector<VertexId> ordering = engine(lg.graph);
  if (ordering.size() != lg.graph.num_vertices()) throw StateError("engine returned a partial ordering");

  for (std::size_t i = 0; i < extras; ++i) {
    if (ordering[i] < n) return false;
  }

  // Targets reachable from v through paths whose interior is all extras.
  const VertexId start = ordering[extras];
  std::vector<std::uint8_t> seen(lg.graph.num_vertices(), 0);
  std::vector<VertexId> stack{start};
  seen[start] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    for (VertexId y : lg.graph.neighbors(x)) {
      if (seen[y]) continue;
      seen[y] = 1;
      if (y < n) {
        ++reached;
      } else {
        stack.push_back(y);
      }
    }
  }
  return reached == n;
}

bool clique_union_bruteforce(const CliqueUnionInstance& instance) {
  const std::size_t n = instance.n;
  std::vector<std::uint8_t> covered(n * n, 0);
  std::size_t count = 0;
  for (const auto& subset : instance.subsets) {
    for (VertexId a : subset) {
      if (a >= n) throw InputError("subset vertex " + std::to_string(a) + " outside [0, " + std::to_string(n) + ")");
    }
    for (VertexId a : subset) {
      for (VertexId b : subset) {
        if (a < b && !covered[std::size_t{a} * n + b]) {
          covered[std::size_t{a} * n + b] = 1;
          ++count;
        }
      }
    }
  }
  return count == n * (n - (n > 0 ? 1 : 0)) / 2;
}

}  // namespace mindeg
