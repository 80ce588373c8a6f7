// Copyright 2026 the stochint authors
// SPDX-License-Identifier: Apache-2.0

#include "stochint/deletion.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "stochint/rng.hpp"

namespace stochint {

std::string_view strategy_name(DeletionStrategy strategy) {
  switch (strategy) {
    case DeletionStrategy::Begin:
      return "begin";
    case DeletionStrategy::Random:
      return "random";
    case DeletionStrategy::End:
      return "end";
  }
  throw std::invalid_argument("strategy_name: unknown strategy");
}

DeletionStrategy strategy_from_name(std::string_view name) {
  if (name == "begin") return DeletionStrategy::Begin;
  if (name == "random") return DeletionStrategy::Random;
  if (name == "end") return DeletionStrategy::End;
  throw std::invalid_argument("strategy_from_name: expected begin|random|end");
}

namespace {

/// First m entries of a random permutation of {0, ..., n-1}, sorted. Partial
/// Fisher-Yates: only the prefix of the shuffle is materialized.
std::vector<std::int64_t> sample_without_replacement(std::int64_t n,
                                                     std::int64_t m,
                                                     rng::SplitMix64& gen) {
  std::vector<std::int64_t> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), std::int64_t{0});
  for (std::int64_t i = 0; i < m; ++i) {
    const auto j = i + static_cast<std::int64_t>(
                           gen.next_below(static_cast<std::uint64_t>(n - i)));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(static_cast<std::size_t>(m));
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace

DeletionSet deletion_set(std::int64_t n, std::int64_t K,
                         DeletionStrategy strategy, std::uint64_t seed) {
  if (n < 1) {
    throw std::invalid_argument("deletion_set: n must be at least 1");
  }
  if (K < 0 || K >= n) {
    throw std::invalid_argument(
        "deletion_set: K must satisfy 0 <= K < n (at least one term survives)");
  }
  DeletionSet set;
  set.n = n;
  set.strategy = strategy;
  if (K == 0) {
    return set;
  }
  switch (strategy) {
    case DeletionStrategy::Begin: {
      set.indices.resize(static_cast<std::size_t>(K));
      std::iota(set.indices.begin(), set.indices.end(), std::int64_t{0});
      break;
    }
    case DeletionStrategy::End: {
      set.indices.resize(static_cast<std::size_t>(K));
      std::iota(set.indices.begin(), set.indices.end(), n - K);
      break;
    }
    case DeletionStrategy::Random: {
      rng::SplitMix64 gen(seed);
      if (K <= n / 2) {
        set.indices = sample_without_replacement(n, K, gen);
      } else {
        // Sampling the smaller complement needs fewer draws; the deleted set
        // is everything the kept draw missed.
        const auto kept = sample_without_replacement(n, n - K, gen);
        set.indices.reserve(static_cast<std::size_t>(K));
        std::size_t pos = 0;
        for (std::int64_t j = 0; j < n; ++j) {
          if (pos < kept.size() && kept[pos] == j) {
            ++pos;
          } else {
            set.indices.push_back(j);
          }
        }
      }
      break;
    }
  }
  return set;
}

}  // namespace stochint
