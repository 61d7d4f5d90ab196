#include "mindeg/bucket_queue.hpp"

#include <string>

#include "mindeg/errors.hpp"

namespace mindeg {

BucketQueue::BucketQueue(std::size_t n)
    : head_(n, kNil), next_(n, kNil), prev_(n, kNil), key_(n, kAbsent), cached_min_(n) {}

void BucketQueue::insert(VertexId v, std::size_t degree) {
  if (contains(v)) throw StateError("vertex " + std::to_string(v) + " already queued");
  if (degree >= head_.size()) {
    throw InputError("degree " + std::to_string(degree) + " exceeds bucket range");
  }
  key_[v] = degree;
  prev_[v] = kNil;
  next_[v] = head_[degree];
  if (head_[degree] != kNil) prev_[head_[degree]] = v;
  head_[degree] = v;
  if (degree < cached_min_) cached_min_ = degree;
  ++size_;
}

void BucketQueue::erase(VertexId v) {
  if (!contains(v)) throw StateError("vertex " + std::to_string(v) + " is not queued");
  if (prev_[v] != kNil) {
    next_[prev_[v]] = next_[v];
  } else {
    head_[key_[v]] = next_[v];
  }
  if (next_[v] != kNil) prev_[next_[v]] = prev_[v];
  next_[v] = prev_[v] = kNil;
  key_[v] = kAbsent;
  --size_;
}

void BucketQueue::update(VertexId v, std::size_t degree) {
  if (key_[v] == degree) return;
  erase(v);
  insert(v, degree);
}

std::size_t BucketQueue::min_key() {
  if (empty()) throw StateError("bucket queue is empty");
  while (head_[cached_min_] == kNil) ++cached_min_;
  return cached_min_;
}

VertexId BucketQueue::select(TieBreak rule, std::mt19937_64* rng) {
  const std::size_t d = min_key();
  VertexId best = head_[d];
  switch (rule) {
    case TieBreak::smallest_id:
      for (VertexId v = next_[best]; v != kNil; v = next_[v]) {
        if (v < best) best = v;
      }
      break;
    case TieBreak::largest_id:
      for (VertexId v = next_[best]; v != kNil; v = next_[v]) {
        if (v > best) best = v;
      }
      break;
    case TieBreak::seeded_random: {
      if (rng == nullptr) throw StateError("seeded_random tie-break needs a generator");
      std::size_t count = 0;
      for (VertexId v = best; v != kNil; v = next_[v]) ++count;
      std::uniform_int_distribution<std::size_t> pick(0, count - 1);
      for (std::size_t steps = pick(*rng); steps > 0; --steps) best = next_[best];
      break;
    }
  }
  return best;
}

}  // namespace mindeg
