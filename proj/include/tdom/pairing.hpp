#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tdom/rng.hpp"

namespace tdom {

// Outcome of exposing one pair.
struct ExposeOutcome {
  int partner_bucket;        // bucket of the uniformly drawn partner point
  int partner_point;         // the partner point id
  int partner_paired_before; // partner bucket's paired count just before this exposure
};

// Partial pairing of n*d points living in n buckets of d points each. Pairs
// are exposed one at a time: the caller picks a source point, the partner is
// drawn uniformly from every other unpaired point. Partners in the same
// bucket (loops) and repeated bucket pairs (multi-edges) are allowed, so a
// completed pairing collapses to a random d-regular pseudograph.
//
// The "degree" of a bucket is its paired-point count. The histogram y tracks
// buckets of degree 0..d-1; fully paired buckets drop out of y. A bucket of
// degree i corresponds to a vertex of degree d-i in the survival graph, so
// degree-0 buckets are exactly the vertices not yet dominated.
//
// Point ids are bucket*d + slot. All mutating operations are O(1) amortized:
// the unpaired pool is a dense array with swap-removal, and the degree-0
// bucket list is maintained the same way (a bucket leaves it permanently on
// its first exposure).
class PairingState {
 public:
  // Throws std::invalid_argument unless n > d >= 3 and n*d is even.
  PairingState(int n, int d);

  int n() const { return n_; }
  int d() const { return d_; }

  int paired_count(int bucket) const { return paired_[bucket]; }
  bool bucket_full(int bucket) const { return paired_[bucket] == d_; }
  std::int64_t pool_size() const { return static_cast<std::int64_t>(pool_.size()); }
  bool complete() const { return pool_.empty(); }

  // y[i] = number of buckets with paired_count == i, for i in 0..d-1.
  const std::vector<std::int64_t>& degree_histogram() const { return y_; }
  std::int64_t degree0_count() const { return y_[0]; }

  // Unpaired points in buckets of degree >= k: sum_{i=k}^{d-1} (d-i)*y[i].
  // s(0) always equals pool_size().
  std::int64_t s(int k) const;

  int point_bucket(int point) const { return point / d_; }
  bool point_unpaired(int point) const;
  // Lowest unpaired slot of the bucket; throws std::logic_error if full.
  int some_unpaired_point(int bucket) const;

  // Pair source_point with a uniform partner among all other unpaired points.
  // Throws std::invalid_argument if source_point is not unpaired and
  // std::runtime_error if fewer than two points remain.
  ExposeOutcome expose_pair(int source_point, Rng& rng);

  // Expose pairs until the bucket is full; partner buckets are appended to
  // partners in exposure order (a loop consumes two of the bucket's points
  // but appends one entry).
  void expose_all_remaining(int bucket, Rng& rng, std::vector<int>& partners);
  std::vector<int> expose_all_remaining(int bucket, Rng& rng);

  // Uniform bucket among those with paired_count == 0, or nullopt when none
  // remain (process complete).
  std::optional<int> sample_degree0_vertex(Rng& rng) const;

  // Expose every remaining pair (uniform completion of the pairing).
  void complete_pairing(Rng& rng);

  // Deterministically pair two specific unpaired points (test fixtures).
  void force_pair(int point_a, int point_b);

  // Exposed pairs as (point, point), in exposure order.
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

 private:
  void pool_remove_(int point);
  void increment_paired_(int bucket);

  int n_ = 0;
  int d_ = 0;
  std::vector<int> paired_;    // per-bucket paired-point count, 0..d
  std::vector<int> pool_;      // dense array of unpaired point ids
  std::vector<int> pool_pos_;  // point id -> index in pool_, -1 once paired
  std::vector<int> deg0_;      // dense array of buckets with paired_count == 0
  std::vector<int> deg0_pos_;  // bucket -> index in deg0_, -1 once exposed
  std::vector<std::int64_t> y_;
  std::vector<std::pair<int, int>> pairs_;
};

}  // namespace tdom
