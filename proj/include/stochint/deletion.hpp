// Copyright 2026 the stochint authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace stochint {

/// Where in the index range {0, ..., n-1} the deleted cells sit.
enum class DeletionStrategy {
  Begin,   ///< The first K indices.
  Random,  ///< K indices drawn uniformly without replacement.
  End,     ///< The last K indices.
};

std::string_view strategy_name(DeletionStrategy strategy);
DeletionStrategy strategy_from_name(std::string_view name);

/// A set of deleted summation indices J_K within {0, ..., n-1}. Indices are
/// kept sorted ascending so evaluators can skip them with a linear merge.
struct DeletionSet {
  std::int64_t n = 0;
  DeletionStrategy strategy = DeletionStrategy::Begin;
  std::vector<std::int64_t> indices;

  std::int64_t k() const { return static_cast<std::int64_t>(indices.size()); }
};

/// Draws the deletion set for the given strategy. `seed` only matters for
/// DeletionStrategy::Random, where equal seeds reproduce equal sets. Requires
/// n >= 1 and 0 <= K < n (at least one term must survive); throws
/// std::invalid_argument otherwise.
DeletionSet deletion_set(std::int64_t n, std::int64_t K,
                         DeletionStrategy strategy, std::uint64_t seed);

}  // namespace stochint
