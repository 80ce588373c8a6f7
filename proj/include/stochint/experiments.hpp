// Copyright 2026 the stochint authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "stochint/deletion.hpp"
#include "stochint/integrand.hpp"
#include "stochint/sums.hpp"

namespace stochint {

/// Description of one sweep or Monte Carlo study: which sum form, which
/// integrand, which deletion strategies, and the exponent grid for K = n^r.
struct ExperimentConfig {
  double T = 1.0;
  std::int64_t n = 2;
  std::vector<double> r_values;
  std::vector<DeletionStrategy> strategies;
  std::int64_t iterations = 1;  ///< Monte Carlo sample count N.
  SumForm form = SumForm::ItoLeft;
  std::string integrand = "identity";
  std::uint64_t master_seed = 0;
  /// Reuse one path set across all (strategy, r) cells, pairing the
  /// comparisons; false draws fresh paths per cell.
  bool shared_paths = true;
  /// Worker threads; 0 defers to the STOCHINT_THREADS environment variable,
  /// then to the hardware count. Output is identical for every setting.
  int threads = 0;

  /// Throws std::invalid_argument when a field is out of its domain
  /// (T <= 0, n < 2, N < 1, any r outside [0, 1)).
  void validate() const;
};

/// Reference value of the limiting integral, as a function of the terminal
/// path value and the duration.
struct ClosedForm {
  SumForm form = SumForm::ItoLeft;
  std::function<double(double terminal, double T)> eval;
};

/// Ito integral of B dB over [0, T]: terminal^2 / 2 - T / 2.
double closed_form_ito_BdB(double terminal, double T);

/// Stratonovich integral of B dB over [0, T]: terminal^2 / 2.
double closed_form_strat_BdB(double terminal);

/// The closed form matching `form` for the given integrand. Only the
/// identity integrand has registered closed forms, and only for the dB
/// forms; anything else throws std::invalid_argument.
ClosedForm closed_form_for(SumForm form, const Integrand& phi);

struct SweepRow {
  SumForm form = SumForm::ItoLeft;
  DeletionStrategy strategy = DeletionStrategy::Begin;
  double r = 0.0;
  std::int64_t K = 0;
  double value = 0.0;
  double closed_form = 0.0;
  double abs_error = 0.0;
};

struct MaeRow {
  SumForm form = SumForm::ItoLeft;
  DeletionStrategy strategy = DeletionStrategy::Begin;
  double r = 0.0;
  std::int64_t K = 0;
  std::int64_t iterations = 0;
  double mae = 0.0;        ///< Mean absolute error against the closed form.
  double std_error = 0.0;  ///< Standard error of that mean.
};

struct MaeReport {
  std::vector<MaeRow> rows;
};

/// Evaluates every (strategy, r) cell on a single path (stream index 0).
/// Rows are ordered strategy-major, r minor, matching the config lists.
std::vector<SweepRow> single_path_sweep(const ExperimentConfig& config);

/// Monte Carlo mean absolute error per (strategy, r) cell over N paths
/// (stream indices 0..N-1). Path evaluation may run on several threads; the
/// reduction always runs in ascending stream order with compensated
/// accumulation, so the report is bit-identical for any thread count.
MaeReport mae_experiment(const ExperimentConfig& config);

/// Whether one r-level of a report is compatible with the expected strategy
/// ordering MAE(begin) <= MAE(random) <= MAE(end), allowing two combined
/// standard errors of slack per comparison. z_* are the observed gaps in
/// combined-standard-error units (positive = expected direction).
struct OrderingVerdict {
  double r = 0.0;
  std::int64_t K = 0;
  bool consistent = false;
  double z_begin_random = 0.0;
  double z_random_end = 0.0;
};

/// One verdict per distinct r > 0 appearing in the report (r = 0 rows are
/// strategy-independent and carry no ordering information). Every examined r
/// must have rows for all three strategies; throws std::invalid_argument
/// otherwise.
std::vector<OrderingVerdict> ordering_check(const MaeReport& report);

/// CSV emission, full round-trip precision, schema
/// `form,strategy,r,K,value,closed_form,abs_error`.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

/// CSV emission, schema `form,strategy,r,K,N,mae,stderr`.
void write_mae_csv(std::ostream& out, const MaeReport& report);

}  // namespace stochint
