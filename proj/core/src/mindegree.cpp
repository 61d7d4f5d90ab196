#include "mindeg/mindegree.hpp"

namespace mindeg {

std::string_view to_string(TieBreak rule) noexcept {
  switch (rule) {
    case TieBreak::smallest_id: return "smallest";
    case TieBreak::largest_id: return "largest";
    case TieBreak::seeded_random: return "random";
  }
  return "unknown";
}

std::string_view to_string(BackendKind kind) noexcept {
  switch (kind) {
    case BackendKind::dense: return "dense";
    case BackendKind::ordered_set: return "sparse";
    case BackendKind::automatic: return "auto";
    case BackendKind::naive: return "naive";
  }
  return "unknown";
}

BackendKind resolve_backend(std::size_t n, const OrderingConfig& config) {
  switch (config.backend) {
    case BackendKind::dense:
      if (n > config.dense_limit) {
        throw ConfigError("dense backend requested for n = " + std::to_string(n) +
                          " above the dense limit " + std::to_string(config.dense_limit));
      }
      return BackendKind::dense;
    case BackendKind::ordered_set:
      return BackendKind::ordered_set;
    case BackendKind::automatic:
      return n <= config.dense_limit ? BackendKind::dense : BackendKind::ordered_set;
    case BackendKind::naive:
      break;
  }
  throw ConfigError("the naive elimination is an oracle, not a fast-engine backend");
}

namespace {

template <AdjacencyStorage Storage>
EliminationResult run(const Graph& g, const OrderingConfig& config, BackendKind tag) {
  MinimumDegreeEngine<Storage> engine(g, config.tie_break, config.seed);
  engine.run();
  return engine.result(tag);
}

}  // namespace

EliminationResult fast_minimum_degree(const Graph& g, const OrderingConfig& config) {
  const BackendKind backend = resolve_backend(g.num_vertices(), config);
  if (backend == BackendKind::dense) return run<DenseStorage>(g, config, backend);
  return run<OrderedSetStorage>(g, config, backend);
}

}  // namespace mindeg
