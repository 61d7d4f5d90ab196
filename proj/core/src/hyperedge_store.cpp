#include "mindeg/hyperedge_store.hpp"

#include "mindeg/errors.hpp"

namespace mindeg {

HyperedgeStore::Handle HyperedgeStore::add(std::span<const VertexId> members) {
  const auto h = static_cast<Handle>(valid_.size());
  for (VertexId v : members) {
    if (v >= incidence_.size()) throw InputError("hyperedge member out of range");
    incidence_[v].push_back(h);
  }
  members_.insert(members_.end(), members.begin(), members.end());
  offsets_.push_back(members_.size());
  valid_.push_back(1);
  ++num_valid_;
  return h;
}

void HyperedgeStore::invalidate(Handle h) {
  if (h >= valid_.size()) throw InputError("unknown hyperedge handle");
  if (valid_[h] != 0) {
    valid_[h] = 0;
    --num_valid_;
  }
}

}  // namespace mindeg
