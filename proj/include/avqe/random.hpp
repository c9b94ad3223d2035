// Copyright 2026 The avqe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>

namespace avqe {

/// SplitMix64. Small, fast and fully specified, so streams are identical on
/// every platform (unlike the distributions in <random>).
class SplitMix64 {
 public:
  using result_type = std::uint64_t;
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n), rejection sampled. n must be > 0.
  std::uint64_t bounded(std::uint64_t n) {
    const std::uint64_t limit = max() - max() % n;
    std::uint64_t r;
    do r = (*this)();
    while (r >= limit);
    return r % n;
  }

 private:
  std::uint64_t state_;
};

/// Order-sensitive hash of a key tuple, used to give every task its own stream.
inline std::uint64_t derive_seed(std::initializer_list<std::uint64_t> parts) {
  std::uint64_t h = 0x51ed270b27f0a3c5ULL;
  for (std::uint64_t p : parts) {
    SplitMix64 mix(h ^ p);
    h = mix() + 0x9e3779b97f4a7c15ULL * (h + 1);
  }
  return SplitMix64(h)();
}

}  // namespace avqe
