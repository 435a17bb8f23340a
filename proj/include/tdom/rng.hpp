#pragma once

#include <cassert>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace tdom {

// Shared engine type: 64-bit Mersenne Twister, seeded per run so every result
// is reproducible from (seed, parameters).
using Rng = std::mt19937_64;

// SplitMix64 finalizer (Steele/Lea/Flood). Used to turn correlated inputs
// (master seed, stream index) into well-mixed, effectively independent seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed for an independent stream derived from a master seed. Streams with
// different indices never share state, so parallel trials are reproducible
// regardless of scheduling.
constexpr std::uint64_t derive_stream_seed(std::uint64_t master,
                                           std::uint64_t stream) noexcept {
  return splitmix64(master ^ splitmix64(0x5851f42d4c957f2dULL + stream));
}

// Uniform integer in [0, bound), bound >= 1. Rejection sampling keeps the
// distribution exactly uniform and consumes an identical engine stream on
// every platform (std::uniform_int_distribution is not portable across
// standard-library implementations).
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  assert(bound >= 1);
  const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

// Uniform element of a non-empty vector.
template <class T>
const T& pick_uniform(Rng& rng, const std::vector<T>& items) {
  assert(!items.empty());
  return items[uniform_below(rng, items.size())];
}

}  // namespace tdom
