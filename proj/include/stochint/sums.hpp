// Copyright 2026 the stochint authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <string_view>

#include "stochint/brownian.hpp"
#include "stochint/deletion.hpp"
#include "stochint/integrand.hpp"
#include "stochint/rng.hpp"

namespace stochint {

/// Which Riemann-Stieltjes approximation a sum evaluates.
enum class SumForm {
  ItoLeft,        ///< Phi at the left node, times the Brownian increment.
  StratMidpoint,  ///< Phi at the midpoint path value, times the increment.
  StratAverage,   ///< Mean of Phi at both cell ends, times the increment.
  MeanSquare,     ///< Integrand in time against dt, not against dB.
};

std::string_view form_name(SumForm form);
SumForm form_from_name(std::string_view name);

/// Where inside each cell a mean-square sum evaluates its process.
enum class URule { Left, Right, Midpoint, RandomInCell };

/// The integrand of a mean-square (dt) sum: a function of the evaluation
/// time that may also read the path, e.g. t -> dPhi/dx(B(t), t).
struct MeanSquareProcess {
  std::function<double(double t, const BrownianPath& path)> eval;
  URule u_rule = URule::Left;
};

/// One evaluated sum. `kept_terms` counts the terms the value actually
/// includes; kept_terms + deleted_terms always equals the cell count n.
struct SumResult {
  double value = 0.0;
  std::int64_t kept_terms = 0;
  std::int64_t deleted_terms = 0;
  SumForm form = SumForm::ItoLeft;
};

/// Incomplete left-endpoint sum: sum over kept cells of
/// Phi(B(t_j), t_j) * (B(t_{j+1}) - B(t_j)). Terms are accumulated in
/// ascending index order with extended-precision compensated summation; the
/// deletion set is consumed as a sorted merge, not a lookup table.
SumResult ito_sum(const BrownianPath& path, const Integrand& phi,
                  const DeletionSet& deletions);

/// Incomplete midpoint sum: Phi((B(t_j) + B(t_{j+1})) / 2, t_j) * increment.
SumResult strat_midpoint_sum(const BrownianPath& path, const Integrand& phi,
                             const DeletionSet& deletions);

/// Incomplete averaged-endpoint sum:
/// (Phi(B(t_{j+1}), t_{j+1}) + Phi(B(t_j), t_j)) / 2 * increment.
SumResult strat_average_sum(const BrownianPath& path, const Integrand& phi,
                            const DeletionSet& deletions);

/// Incomplete mean-square sum: sum over kept cells of X(u_j) * (t_{j+1} -
/// t_j), with u_j placed by the process's URule. `seed` is consulted only
/// for URule::RandomInCell, where u_j is uniform in (t_j, t_{j+1}).
SumResult mean_square_sum(const BrownianPath& path,
                          const MeanSquareProcess& process,
                          const DeletionSet& deletions, const SeedSpec& seed);

/// The mass removed by a deletion set: the sum, over deleted cells only, of
/// the given form's terms. Complete sum = incomplete sum + deleted part, term
/// for term. SumForm::MeanSquare is rejected (this signature carries no
/// process); throws std::invalid_argument.
SumResult deleted_part(const BrownianPath& path, const Integrand& phi,
                       const DeletionSet& deletions, SumForm form);

/// Midpoint sum minus left-endpoint sum minus half the mean-square sum of
/// dPhi/dx(B(t), t) sampled at left nodes, over the same kept cells. For
/// smooth Phi this residual tends to zero with the mesh; for Phi(x,t) = x it
/// collapses per term to (increment^2 - dt) / 2. The three parts share one
/// extended-precision accumulation so the cancellation is not polluted by
/// intermediate rounding. Requires phi.d_dx; throws std::invalid_argument.
double conversion_residual(const BrownianPath& path, const Integrand& phi,
                           const DeletionSet& deletions);

}  // namespace stochint
