#include "tdom/pairing.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace tdom {

PairingState::PairingState(int n, int d) : n_(n), d_(d) {
  if (d < 3) throw std::invalid_argument("degree must be at least 3");
  if (n <= d) throw std::invalid_argument("bucket count must exceed the degree");
  const std::int64_t points = static_cast<std::int64_t>(n) * d;
  if (points % 2 != 0) throw std::invalid_argument("n*d must be even");
  if (points > std::numeric_limits<int>::max())
    throw std::invalid_argument("n*d exceeds the supported point range");

  paired_.assign(n, 0);
  pool_.resize(static_cast<std::size_t>(points));
  std::iota(pool_.begin(), pool_.end(), 0);
  pool_pos_.resize(pool_.size());
  std::iota(pool_pos_.begin(), pool_pos_.end(), 0);
  deg0_.resize(n);
  std::iota(deg0_.begin(), deg0_.end(), 0);
  deg0_pos_.resize(n);
  std::iota(deg0_pos_.begin(), deg0_pos_.end(), 0);
  y_.assign(d, 0);
  y_[0] = n;
}

std::int64_t PairingState::s(int k) const {
  if (k < 0 || k >= d_) throw std::invalid_argument("class index out of range");
  std::int64_t total = 0;
  for (int i = k; i < d_; ++i) total += static_cast<std::int64_t>(d_ - i) * y_[i];
  return total;
}

bool PairingState::point_unpaired(int point) const {
  return point >= 0 && point < static_cast<int>(pool_pos_.size()) && pool_pos_[point] >= 0;
}

int PairingState::some_unpaired_point(int bucket) const {
  const int base = bucket * d_;
  for (int slot = 0; slot < d_; ++slot) {
    if (pool_pos_[base + slot] >= 0) return base + slot;
  }
  throw std::logic_error("bucket has no unpaired point");
}

void PairingState::pool_remove_(int point) {
  const int idx = pool_pos_[point];
  const int last = pool_.back();
  pool_[idx] = last;
  pool_pos_[last] = idx;
  pool_.pop_back();
  pool_pos_[point] = -1;
}

void PairingState::increment_paired_(int bucket) {
  const int old = paired_[bucket];
  paired_[bucket] = old + 1;
  if (old == 0) {
    const int idx = deg0_pos_[bucket];
    const int last = deg0_.back();
    deg0_[idx] = last;
    deg0_pos_[last] = idx;
    deg0_.pop_back();
    deg0_pos_[bucket] = -1;
  }
  --y_[old];
  if (old + 1 < d_) ++y_[old + 1];
}

ExposeOutcome PairingState::expose_pair(int source_point, Rng& rng) {
  if (!point_unpaired(source_point))
    throw std::invalid_argument("source point is not in the unpaired pool");
  if (pool_.size() < 2)
    throw std::runtime_error("unpaired pool exhausted (instance too small)");

  pool_remove_(source_point);
  const int partner = pool_[uniform_below(rng, pool_.size())];
  const int partner_bucket = partner / d_;
  const int partner_before = paired_[partner_bucket];
  pool_remove_(partner);
  increment_paired_(source_point / d_);
  increment_paired_(partner_bucket);
  pairs_.emplace_back(source_point, partner);
  return {partner_bucket, partner, partner_before};
}

void PairingState::expose_all_remaining(int bucket, Rng& rng, std::vector<int>& partners) {
  if (bucket_full(bucket)) throw std::invalid_argument("bucket is already fully paired");
  while (!bucket_full(bucket)) {
    partners.push_back(expose_pair(some_unpaired_point(bucket), rng).partner_bucket);
  }
}

std::vector<int> PairingState::expose_all_remaining(int bucket, Rng& rng) {
  std::vector<int> partners;
  expose_all_remaining(bucket, rng, partners);
  return partners;
}

std::optional<int> PairingState::sample_degree0_vertex(Rng& rng) const {
  if (deg0_.empty()) return std::nullopt;
  return deg0_[uniform_below(rng, deg0_.size())];
}

void PairingState::complete_pairing(Rng& rng) {
  while (!pool_.empty()) expose_pair(pool_.front(), rng);
}

void PairingState::force_pair(int point_a, int point_b) {
  if (point_a == point_b) throw std::invalid_argument("cannot pair a point with itself");
  if (!point_unpaired(point_a) || !point_unpaired(point_b))
    throw std::invalid_argument("both points must be unpaired");
  pool_remove_(point_a);
  pool_remove_(point_b);
  increment_paired_(point_a / d_);
  increment_paired_(point_b / d_);
  pairs_.emplace_back(point_a, point_b);
}

}  // namespace tdom
