// Copyright 2026 the stochint authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

namespace stochint {

/// A finite partition 0 = t_0 < t_1 < ... < t_n = T of [0, T].
struct Partition {
  double duration = 0.0;        ///< Right endpoint T.
  std::int64_t n = 0;           ///< Number of cells (nodes.size() == n + 1).
  std::vector<double> nodes;    ///< Strictly increasing node times.
  double mesh = 0.0;            ///< max_j (t_{j+1} - t_j).

  double dt(std::int64_t j) const { return nodes[j + 1] - nodes[j]; }
};

/// Builds the equidistant partition with n cells on [0, T]. Each interior
/// node is computed directly as j*T/n rather than by cumulative addition, so
/// node error stays at a couple of ulp independent of n; the final node is
/// pinned to exactly T. Throws std::invalid_argument unless T > 0 and n >= 1.
Partition make_equal_partition(double T, std::int64_t n);

/// Number of deleted cells as a function of the partition size: floor(n^r).
/// r = 0 gives 0 (the complete sum); the admissible range is 0 <= r < 1, and
/// the result is always < n. Throws std::invalid_argument otherwise.
std::int64_t k_of_n(std::int64_t n, double r);

}  // namespace stochint
