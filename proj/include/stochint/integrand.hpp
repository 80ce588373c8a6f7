// Copyright 2026 the stochint authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <optional>
#include <string>

namespace stochint {

/// An integrand Phi(x, t) evaluated at (path value, time). The x-derivative
/// is optional: operations that need it (the conversion residual) reject
/// integrands without one. `sup_bound`, when present, bounds |Phi| uniformly
/// and feeds the second-moment bound on deleted mass.
struct Integrand {
  std::string name;
  std::function<double(double x, double t)> eval;
  std::function<double(double x, double t)> d_dx;
  std::optional<double> sup_bound;
  bool fourth_moment_bounded = false;
};

/// Builds an integrand from its registry id:
///   identity        Phi(x, t) = x
///   constant:<c>    Phi(x, t) = c
///   sin             Phi(x, t) = sin(x)
///   poly:<c0,c1,..> Phi(x, t) = sum_i c_i * x^i
///   abs             Phi(x, t) = |x|   (no derivative registered)
/// Throws std::invalid_argument for unknown ids or malformed parameters.
Integrand make_integrand(const std::string& id);

}  // namespace stochint
