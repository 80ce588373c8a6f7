// Copyright 2026 the stochint authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <vector>

#include "stochint/partition.hpp"
#include "stochint/rng.hpp"

namespace stochint {

/// A Brownian path sampled on a partition: values[j] = B(t_j), values[0] = 0.
/// The increment over cell j is values[j+1] - values[j].
struct BrownianPath {
  std::shared_ptr<const Partition> partition;
  std::vector<double> values;

  std::int64_t n() const { return partition->n; }
  double terminal() const { return values.back(); }
  double increment(std::int64_t j) const { return values[j + 1] - values[j]; }

  /// B at an arbitrary time in [0, T]: exact at nodes, linear interpolation
  /// between them (the path is only known on the grid). Throws
  /// std::invalid_argument outside [0, T].
  double value_at(double t) const;
};

/// Samples a Brownian path on `partition`. Increments are independent
/// N(0, dt_j) deviates drawn from the counter-based stream identified by
/// `seed`, so equal seeds give bit-identical paths regardless of threading
/// or sampling order. Values are accumulated in index order.
BrownianPath sample_path(std::shared_ptr<const Partition> partition,
                         const SeedSpec& seed);

struct IncrementMoments {
  double mean = 0.0;
  double variance = 0.0;       ///< Population variance (divides by the count).
  double fourth_moment = 0.0;  ///< Raw fourth moment E[x^4] estimate.
};

/// Sample moments of the cell-j increment across a collection of paths.
/// All paths must share one partition and j must index a cell; throws
/// std::invalid_argument otherwise (including an empty collection).
IncrementMoments increment_moments(std::span<const BrownianPath> paths,
                                   std::int64_t j);

/// Writes the path as CSV with header "t,B", one row per node, full
/// round-trip precision.
void write_path_csv(std::ostream& out, const BrownianPath& path);

}  // namespace stochint
