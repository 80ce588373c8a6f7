// Copyright 2026 the stochint authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

namespace stochint {

/// Identifies one reproducible random stream. Every stochastic object in the
/// library (a Brownian path, a deletion draw, a cell-point draw) is a pure
/// function of a SeedSpec plus a purpose tag, so experiments can be replayed
/// exactly and path i never depends on how paths 0..i-1 were scheduled.
struct SeedSpec {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_index = 0;
};

namespace rng {

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

/// SplitMix64 output function (Steele, Lea & Flood's constants). Bijective on
/// 64-bit words, so distinct inputs never collide.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Purpose tags that keep the random streams used for Gaussian increments,
/// in-cell evaluation points, and deletion draws pairwise disjoint even when
/// they share a (master_seed, stream_index) pair.
enum class Domain : std::uint64_t {
  GaussianIncrements = 1,
  CellPoints = 2,
  Deletions = 3,
};

std::uint64_t derive_stream_key(std::uint64_t master_seed,
                                std::uint64_t stream_index,
                                Domain domain) noexcept;

/// Inverse of the standard normal CDF, i.e. the quantile function. Wichura's
/// AS 241 (PPND16) rational approximations, accurate to roughly 1e-16
/// relative over the full open interval. Throws std::invalid_argument unless
/// 0 < p < 1.
double inverse_normal_cdf(double p);

/// Counter-based uniform stream: the i-th output is a pure function of
/// (key, i). Outputs match SplitMix64 seeded with the same key, but random
/// access means increments can be produced in any order or split across
/// threads without changing a single bit of the result.
class CounterStream {
 public:
  explicit CounterStream(std::uint64_t key) : key_(key) {}
  CounterStream(const SeedSpec& seed, Domain domain)
      : key_(derive_stream_key(seed.master_seed, seed.stream_index, domain)) {}

  std::uint64_t bits_at(std::uint64_t counter) const noexcept {
    return mix64(key_ + (counter + 1) * kGolden);
  }

  /// Uniform deviate strictly inside (0, 1): the top 53 bits of the word,
  /// centered on the cell so neither endpoint is reachable.
  double uniform_at(std::uint64_t counter) const noexcept {
    return (static_cast<double>(bits_at(counter) >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Standard normal deviate at position `counter`, via the inverse CDF.
  double normal_at(std::uint64_t counter) const {
    return inverse_normal_cdf(uniform_at(counter));
  }

 private:
  std::uint64_t key_;
};

/// Sequential SplitMix64, used where draws are inherently ordered (sampling
/// index sets without replacement). Same engine as CounterStream.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() noexcept {
    state_ += kGolden;
    return mix64(state_);
  }

  /// Unbiased draw from {0, ..., bound-1} by rejection. Requires bound > 0.
  std::uint64_t next_below(std::uint64_t bound) noexcept;

 private:
  std::uint64_t state_;
};

}  // namespace rng
}  // namespace stochint
