// Copyright 2026 the stochint authors
// SPDX-License-Identifier: Apache-2.0

#include "stochint/sums.hpp"

#include <stdexcept>

#include "stochint/kahan.hpp"

namespace stochint {

std::string_view form_name(SumForm form) {
  switch (form) {
    case SumForm::ItoLeft:
      return "ito";
    case SumForm::StratMidpoint:
      return "strat-midpoint";
    case SumForm::StratAverage:
      return "strat-average";
    case SumForm::MeanSquare:
      return "mean-square";
  }
  throw std::invalid_argument("form_name: unknown form");
}

SumForm form_from_name(std::string_view name) {
  if (name == "ito") return SumForm::ItoLeft;
  if (name == "strat-midpoint") return SumForm::StratMidpoint;
  if (name == "strat-average") return SumForm::StratAverage;
  if (name == "mean-square") return SumForm::MeanSquare;
  throw std::invalid_argument(
      "form_from_name: expected ito|strat-midpoint|strat-average|mean-square");
}

namespace {

void check_dimensions(const BrownianPath& path, const DeletionSet& deletions,
                      const char* op) {
  if (deletions.n != path.n()) {
    throw std::invalid_argument(std::string(op) +
                                ": deletion set and path disagree on n");
  }
}

/// Walks cells 0..n-1 in ascending order, consuming the sorted deletion
/// indices as a merge, and accumulates term(j) over the selected side of the
/// kept/deleted split. Terms are extended-precision with compensation, so
/// telescoping identities survive n = 10^6 cells.
template <typename TermFn>
SumResult accumulate_cells(const BrownianPath& path,
                           const DeletionSet& deletions, SumForm form,
                           bool over_deleted, TermFn&& term) {
  KahanAccumulator<long double> acc;
  const std::int64_t n = path.n();
  std::size_t next_deleted = 0;
  std::int64_t included = 0;
  for (std::int64_t j = 0; j < n; ++j) {
    const bool is_deleted = next_deleted < deletions.indices.size() &&
                            deletions.indices[next_deleted] == j;
    if (is_deleted) ++next_deleted;
    if (is_deleted == over_deleted) {
      acc += term(j);
      ++included;
    }
  }
  SumResult result;
  result.value = static_cast<double>(static_cast<long double>(acc));
  result.kept_terms = included;
  result.deleted_terms = n - included;
  result.form = form;
  return result;
}

struct Terms {
  const double* B;
  const double* t;
  const Integrand& phi;

  Terms(const BrownianPath& path, const Integrand& integrand)
      : B(path.values.data()),
        t(path.partition->nodes.data()),
        phi(integrand) {}

  long double ito(std::int64_t j) const {
    const long double dB = static_cast<long double>(B[j + 1]) - B[j];
    return static_cast<long double>(phi.eval(B[j], t[j])) * dB;
  }
  long double midpoint(std::int64_t j) const {
    const long double dB = static_cast<long double>(B[j + 1]) - B[j];
    const double mid = (B[j] + B[j + 1]) * 0.5;
    return static_cast<long double>(phi.eval(mid, t[j])) * dB;
  }
  long double average(std::int64_t j) const {
    const long double dB = static_cast<long double>(B[j + 1]) - B[j];
    const long double left = phi.eval(B[j], t[j]);
    const long double right = phi.eval(B[j + 1], t[j + 1]);
    return (left + right) * 0.5L * dB;
  }
};

}  // namespace

SumResult ito_sum(const BrownianPath& path, const Integrand& phi,
                  const DeletionSet& deletions) {
  check_dimensions(path, deletions, "ito_sum");
  const Terms terms(path, phi);
  return accumulate_cells(path, deletions, SumForm::ItoLeft, false,
                          [&](std::int64_t j) { return terms.ito(j); });
}

SumResult strat_midpoint_sum(const BrownianPath& path, const Integrand& phi,
                             const DeletionSet& deletions) {
  check_dimensions(path, deletions, "strat_midpoint_sum");
  const Terms terms(path, phi);
  return accumulate_cells(path, deletions, SumForm::StratMidpoint, false,
                          [&](std::int64_t j) { return terms.midpoint(j); });
}

SumResult strat_average_sum(const BrownianPath& path, const Integrand& phi,
                            const DeletionSet& deletions) {
  check_dimensions(path, deletions, "strat_average_sum");
  const Terms terms(path, phi);
  return accumulate_cells(path, deletions, SumForm::StratAverage, false,
                          [&](std::int64_t j) { return terms.average(j); });
}

SumResult mean_square_sum(const BrownianPath& path,
                          const MeanSquareProcess& process,
                          const DeletionSet& deletions, const SeedSpec& seed) {
  check_dimensions(path, deletions, "mean_square_sum");
  if (!process.eval) {
    throw std::invalid_argument("mean_square_sum: process has no evaluator");
  }
  const double* t = path.partition->nodes.data();
  const rng::CounterStream cells(seed, rng::Domain::CellPoints);
  const auto u_at = [&](std::int64_t j) -> double {
    switch (process.u_rule) {
      case URule::Left:
        return t[j];
      case URule::Right:
        return t[j + 1];
      case URule::Midpoint:
        return (t[j] + t[j + 1]) * 0.5;
      case URule::RandomInCell:
        return t[j] + cells.uniform_at(static_cast<std::uint64_t>(j)) *
                          (t[j + 1] - t[j]);
    }
    throw std::invalid_argument("mean_square_sum: unknown u_rule");
  };
  return accumulate_cells(
      path, deletions, SumForm::MeanSquare, false, [&](std::int64_t j) {
        const long double dt = static_cast<long double>(t[j + 1]) - t[j];
        return static_cast<long double>(process.eval(u_at(j), path)) * dt;
      });
}

SumResult deleted_part(const BrownianPath& path, const Integrand& phi,
                       const DeletionSet& deletions, SumForm form) {
  check_dimensions(path, deletions, "deleted_part");
  const Terms terms(path, phi);
  switch (form) {
    case SumForm::ItoLeft:
      return accumulate_cells(path, deletions, form, true,
                              [&](std::int64_t j) { return terms.ito(j); });
    case SumForm::StratMidpoint:
      return accumulate_cells(
          path, deletions, form, true,
          [&](std::int64_t j) { return terms.midpoint(j); });
    case SumForm::StratAverage:
      return accumulate_cells(
          path, deletions, form, true,
          [&](std::int64_t j) { return terms.average(j); });
    case SumForm::MeanSquare:
      throw std::invalid_argument(
          "deleted_part: mean-square needs a process, not an integrand");
  }
  throw std::invalid_argument("deleted_part: unknown form");
}

double conversion_residual(const BrownianPath& path, const Integrand& phi,
                           const DeletionSet& deletions) {
  check_dimensions(path, deletions, "conversion_residual");
  if (!phi.d_dx) {
    throw std::invalid_argument(
        "conversion_residual: integrand has no x-derivative");
  }
  // The midpoint, left-endpoint, and dt parts cancel almost completely, so
  // they are fused into one compensated accumulation per term instead of
  // rounding three separate sums to double first.
  const Terms terms(path, phi);
  const double* B = path.values.data();
  const double* t = path.partition->nodes.data();
  const auto result = accumulate_cells(
      path, deletions, SumForm::StratMidpoint, false, [&](std::int64_t j) {
        const long double dt = static_cast<long double>(t[j + 1]) - t[j];
        const long double slope = phi.d_dx(B[j], t[j]);
        return terms.midpoint(j) - terms.ito(j) - 0.5L * slope * dt;
      });
  return result.value;
}

}  // namespace stochint
