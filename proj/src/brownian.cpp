// Copyright 2026 the stochint authors
// SPDX-License-Identifier: Apache-2.0

#include "stochint/brownian.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "stochint/csv.hpp"
#include "stochint/kahan.hpp"

namespace stochint {

double BrownianPath::value_at(double t) const {
  const auto& nodes = partition->nodes;
  if (!(t >= nodes.front() && t <= nodes.back())) {
    throw std::invalid_argument("BrownianPath::value_at: t outside [0, T]");
  }
  const auto it = std::lower_bound(nodes.begin(), nodes.end(), t);
  const auto idx = static_cast<std::size_t>(it - nodes.begin());
  if (it != nodes.end() && *it == t) {
    return values[idx];
  }
  const double t0 = nodes[idx - 1];
  const double t1 = nodes[idx];
  const double w = (t - t0) / (t1 - t0);
  return values[idx - 1] + w * (values[idx] - values[idx - 1]);
}

BrownianPath sample_path(std::shared_ptr<const Partition> partition,
                         const SeedSpec& seed) {
  if (!partition) {
    throw std::invalid_argument("sample_path: partition must not be null");
  }
  const rng::CounterStream stream(seed, rng::Domain::GaussianIncrements);
  BrownianPath path;
  path.partition = partition;
  path.values.resize(static_cast<std::size_t>(partition->n) + 1);
  path.values[0] = 0.0;
  double level = 0.0;
  for (std::int64_t j = 0; j < partition->n; ++j) {
    const double dt = partition->nodes[j + 1] - partition->nodes[j];
    level += std::sqrt(dt) * stream.normal_at(static_cast<std::uint64_t>(j));
    path.values[j + 1] = level;
  }
  return path;
}

IncrementMoments increment_moments(std::span<const BrownianPath> paths,
                                   std::int64_t j) {
  if (paths.empty()) {
    throw std::invalid_argument("increment_moments: need at least one path");
  }
  const auto* partition = paths.front().partition.get();
  if (j < 0 || j >= partition->n) {
    throw std::invalid_argument("increment_moments: cell index out of range");
  }
  KahanAccumulator<long double> sum1;
  KahanAccumulator<long double> sum2;
  KahanAccumulator<long double> sum4;
  for (const auto& path : paths) {
    if (path.partition.get() != partition) {
      throw std::invalid_argument(
          "increment_moments: paths must share one partition");
    }
    const auto x = static_cast<long double>(path.increment(j));
    sum1 += x;
    sum2 += x * x;
    sum4 += x * x * x * x;
  }
  const auto count = static_cast<long double>(paths.size());
  const long double mean = static_cast<long double>(sum1) / count;
  IncrementMoments moments;
  moments.mean = static_cast<double>(mean);
  moments.variance =
      static_cast<double>(static_cast<long double>(sum2) / count - mean * mean);
  moments.fourth_moment = static_cast<double>(static_cast<long double>(sum4) / count);
  return moments;
}

void write_path_csv(std::ostream& out, const BrownianPath& path) {
  out << "t,B\n";
  for (std::size_t j = 0; j < path.values.size(); ++j) {
    out << csv::format_g17(path.partition->nodes[j]) << ','
        << csv::format_g17(path.values[j]) << '\n';
  }
}

}  // namespace stochint
