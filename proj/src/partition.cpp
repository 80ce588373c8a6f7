// Copyright 2026 the stochint authors
// SPDX-License-Identifier: Apache-2.0

#include "stochint/partition.hpp"

#include <cmath>
#include <stdexcept>

namespace stochint {

Partition make_equal_partition(double T, std::int64_t n) {
  if (!(T > 0.0) || !std::isfinite(T)) {
    throw std::invalid_argument("make_equal_partition: T must be positive and finite");
  }
  if (n < 1) {
    throw std::invalid_argument("make_equal_partition: n must be at least 1");
  }
  Partition part;
  part.duration = T;
  part.n = n;
  part.nodes.resize(static_cast<std::size_t>(n) + 1);
  for (std::int64_t j = 0; j < n; ++j) {
    part.nodes[j] = static_cast<double>(j) * T / static_cast<double>(n);
  }
  part.nodes[n] = T;
  double mesh = 0.0;
  for (std::int64_t j = 0; j < n; ++j) {
    mesh = std::max(mesh, part.nodes[j + 1] - part.nodes[j]);
  }
  part.mesh = mesh;
  return part;
}

std::int64_t k_of_n(std::int64_t n, double r) {
  if (n < 1) {
    throw std::invalid_argument("k_of_n: n must be at least 1");
  }
  if (!(r >= 0.0 && r < 1.0)) {
    throw std::invalid_argument("k_of_n: r must lie in [0, 1)");
  }
  if (r == 0.0) {
    return 0;
  }
  // Evaluate n^r in extended precision and nudge up by a hair before
  // flooring, so exact powers (e.g. 1e6^0.5) land on their integer value
  // instead of one below it.
  const long double power = std::pow(static_cast<long double>(n), static_cast<long double>(r));
  auto k = static_cast<std::int64_t>(std::floor(power * (1.0L + 1e-15L)));
  // floor(n^r) < n whenever n >= 2 and r < 1; the clamp only acts at n = 1.
  return std::min(k, n - 1);
}

}  // namespace stochint
