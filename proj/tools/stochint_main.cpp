// Copyright 2026 the stochint authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: single-path sweeps, Monte Carlo MAE tables, the
// incomplete-sum count, and the Ito/Stratonovich conversion identity check.
// Exit codes: 0 success, 1 I/O failure, 2 usage or validation error,
// 3 numerical check failure.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stochint/counting.hpp"
#include "stochint/csv.hpp"
#include "stochint/experiments.hpp"
#include "stochint/kahan.hpp"
#include "stochint/partition.hpp"
#include "stochint/sums.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCheckFailed = 3;

struct CommonFlags {
  double T = 1.0;
  std::int64_t n = 10000;
  std::vector<double> r_list{0.0};
  std::vector<std::string> strategies{"begin"};
  std::string form = "ito";
  std::string integrand = "identity";
  std::uint64_t seed = 0;
  std::string out;
  int threads = 0;
  std::string dump_config;
  bool verbose = false;
};

void add_common_flags(CLI::App& cmd, CommonFlags& flags, bool with_cells) {
  cmd.add_option("--T", flags.T, "Duration of the time interval [0, T]")
      ->capture_default_str();
  cmd.add_option("--n", flags.n, "Number of partition cells")
      ->capture_default_str();
  if (with_cells) {
    cmd.add_option("--r-list", flags.r_list,
                   "Deletion exponents r (K = floor(n^r)), comma separated")
        ->delimiter(',')
        ->capture_default_str();
    cmd.add_option("--strategies", flags.strategies,
                   "Deletion strategies: begin, random, end (comma separated)")
        ->delimiter(',')
        ->capture_default_str();
    cmd.add_option("--form", flags.form,
                   "Sum form: ito | strat-midpoint | strat-average")
        ->capture_default_str();
  }
  cmd.add_option("--integrand", flags.integrand,
                 "Integrand id: identity | constant:<c> | sin | poly:<coeffs> | abs")
      ->capture_default_str();
  cmd.add_option("--seed", flags.seed, "Master seed for all random streams")
      ->capture_default_str();
  cmd.add_option("--out", flags.out,
                 "Output CSV path (default: standard output)");
  cmd.add_option("--threads", flags.threads,
                 "Worker threads (0: $STOCHINT_THREADS, then hardware)")
      ->capture_default_str();
  cmd.add_flag("-v,--verbose", flags.verbose, "Echo settings to stderr");
  cmd.set_config("--config", "",
                 "Read options from a TOML file (flags take precedence)");
  // Meta: where to record the settings, not a setting itself; keep it out
  // of the dump so replaying a dumped config does not re-dump.
  cmd.add_option("--dump-config", flags.dump_config,
                 "Write the effective options to a TOML file and continue")
      ->configurable(false);
}

/// CLI11 auto-loads a config file only when it is attached to the root
/// command; configs declared on subcommands are read here instead, after the
/// command line has been parsed, so explicit flags keep precedence over file
/// values. Flat keys and a [<subcommand>] section both address this command;
/// sections for other subcommands are ignored so one file can serve several.
void apply_config_file(CLI::App& cmd) {
  auto* config_option = cmd.get_config_ptr();
  if (config_option == nullptr || config_option->count() == 0) {
    return;
  }
  const auto path = config_option->as<std::string>();
  std::ifstream file(path);
  if (!file) {
    throw std::runtime_error("cannot read config file '" + path + "'");
  }
  for (const auto& item : cmd.get_config_formatter()->from_config(file)) {
    if (item.parents.size() > 1 ||
        (item.parents.size() == 1 && item.parents[0] != cmd.get_name())) {
      continue;
    }
    if (item.name == "++" || item.name == "--") {
      continue;  // section open/close markers
    }
    auto* option = cmd.get_option_no_throw("--" + item.name);
    if (option == nullptr) {
      throw std::invalid_argument("config file: unknown option '" + item.name +
                                  "'");
    }
    if (option == config_option || !option->get_configurable() ||
        !option->empty()) {
      continue;
    }
    if (option->get_expected_min() == 0) {
      option->add_result(option->get_flag_value(
          item.name, cmd.get_config_formatter()->to_flag(item)));
    } else {
      option->add_result(item.inputs);
    }
    option->run_callback();
  }
}

void finish_flags(const CLI::App& cmd, const CommonFlags& flags) {
  if (!flags.dump_config.empty()) {
    std::ofstream file(flags.dump_config);
    file << cmd.config_to_str(true, true);
    if (!file.good()) {
      throw std::runtime_error("cannot write config to '" + flags.dump_config +
                               "'");
    }
  }
  if (flags.verbose) {
    std::cerr << "stochint: effective options\n" << cmd.config_to_str(true, false);
  }
}

stochint::ExperimentConfig to_experiment_config(const CommonFlags& flags,
                                                std::int64_t iterations) {
  stochint::ExperimentConfig config;
  config.T = flags.T;
  config.n = flags.n;
  config.r_values = flags.r_list;
  for (const auto& name : flags.strategies) {
    config.strategies.push_back(stochint::strategy_from_name(name));
  }
  config.iterations = iterations;
  config.form = stochint::form_from_name(flags.form);
  config.integrand = flags.integrand;
  config.master_seed = flags.seed;
  config.threads = flags.threads;
  return config;
}

/// Runs `writer` against --out or stdout; returns kExitOk or kExitIo.
int with_output(const std::string& out_path,
                const std::function<void(std::ostream&)>& writer) {
  if (out_path.empty()) {
    writer(std::cout);
    std::cout.flush();
    return std::cout.good() ? kExitOk : kExitIo;
  }
  std::ofstream file(out_path);
  if (!file) {
    std::cerr << "stochint: cannot open '" << out_path << "' for writing\n";
    return kExitIo;
  }
  writer(file);
  file.flush();
  if (!file.good()) {
    std::cerr << "stochint: error while writing '" << out_path << "'\n";
    return kExitIo;
  }
  return kExitOk;
}

int run_sweep(const CLI::App& cmd, const CommonFlags& flags) {
  finish_flags(cmd, flags);
  const auto rows = stochint::single_path_sweep(to_experiment_config(flags, 1));
  return with_output(flags.out, [&](std::ostream& out) {
    stochint::write_sweep_csv(out, rows);
  });
}

int run_mae(const CLI::App& cmd, const CommonFlags& flags,
            std::int64_t iterations) {
  finish_flags(cmd, flags);
  const auto report =
      stochint::mae_experiment(to_experiment_config(flags, iterations));
  return with_output(flags.out, [&](std::ostream& out) {
    stochint::write_mae_csv(out, report);
  });
}

int run_count(const CLI::App& cmd, const CommonFlags& flags, std::int64_t n,
              std::int64_t K) {
  finish_flags(cmd, flags);
  const auto count = stochint::count_incomplete_sums(n, K);
  return with_output(flags.out, [&](std::ostream& out) {
    out << count.get_str() << '\n';
  });
}

int run_identity_check(const CLI::App& cmd, const CommonFlags& flags,
                       std::int64_t paths, double tolerance, double r,
                       const std::string& strategy) {
  finish_flags(cmd, flags);
  if (paths < 1) {
    throw std::invalid_argument("identity-check: --paths must be >= 1");
  }
  const auto phi = stochint::make_integrand(flags.integrand);
  if (!phi.d_dx) {
    throw std::invalid_argument("identity-check: integrand '" +
                                flags.integrand + "' has no derivative");
  }
  const auto partition = std::make_shared<const stochint::Partition>(
      stochint::make_equal_partition(flags.T, flags.n));
  const auto K = stochint::k_of_n(flags.n, r);
  const auto kind = stochint::strategy_from_name(strategy);

  std::vector<double> residuals(static_cast<std::size_t>(paths));
  for (std::int64_t i = 0; i < paths; ++i) {
    const auto path = stochint::sample_path(
        partition, stochint::SeedSpec{flags.seed, static_cast<std::uint64_t>(i)});
    const auto deletions = stochint::deletion_set(
        flags.n, K, kind,
        stochint::rng::derive_stream_key(flags.seed, static_cast<std::uint64_t>(i),
                                         stochint::rng::Domain::Deletions));
    residuals[static_cast<std::size_t>(i)] =
        stochint::conversion_residual(path, phi, deletions);
  }

  stochint::KahanAccumulator<long double> total;
  for (const double value : residuals) {
    total += std::abs(static_cast<long double>(value));
  }
  const double mean_abs =
      static_cast<double>(static_cast<long double>(total) / paths);

  // Default tolerance: three times the expected mean |residual| for the
  // identity integrand, E = (1/2) * sqrt(2 * kept) * (T/n) * sqrt(2/pi),
  // the folded first moment of the kept-cell quadratic variation error.
  double tol = tolerance;
  if (tol < 0.0) {
    const double dt = flags.T / static_cast<double>(flags.n);
    const double kept = static_cast<double>(flags.n - K);
    tol = 3.0 * 0.5 * std::sqrt(2.0 * kept) * dt * std::sqrt(2.0 / M_PI);
  }

  const int io_status = with_output(flags.out, [&](std::ostream& out) {
    out << "path,residual\n";
    for (std::size_t i = 0; i < residuals.size(); ++i) {
      out << i << ',' << stochint::csv::format_g17(residuals[i]) << '\n';
    }
  });
  std::cerr << "identity-check: mean |residual| = "
            << stochint::csv::format_g17(mean_abs) << " (tolerance "
            << stochint::csv::format_g17(tol) << ", " << paths << " paths, n="
            << flags.n << ", K=" << K << ")\n";
  if (io_status != kExitOk) {
    return io_status;
  }
  return mean_abs <= tol ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Complete and incomplete Riemann-Stieltjes sums for stochastic "
               "integrals on Brownian paths"};
  app.require_subcommand(1);

  CommonFlags sweep_flags;
  auto* sweep = app.add_subcommand(
      "sweep", "Evaluate every (strategy, r) cell on one path");
  add_common_flags(*sweep, sweep_flags, true);

  CommonFlags mae_flags;
  std::int64_t iterations = 1000;
  auto* mae = app.add_subcommand(
      "mae", "Monte Carlo mean absolute error per (strategy, r) cell");
  add_common_flags(*mae, mae_flags, true);
  mae->add_option("--iters", iterations, "Monte Carlo iterations N")
      ->capture_default_str();

  CommonFlags count_flags;
  std::int64_t count_n = 0;
  std::int64_t count_K = 0;
  auto* count = app.add_subcommand(
      "count", "Exact number of incomplete sums: C(n,K) * (2^K - 1)");
  count->add_option("--n", count_n, "Number of partition cells")->required();
  count->add_option("--K", count_K, "Maximum number of deleted cells")
      ->required();
  count->add_option("--out", count_flags.out,
                    "Output path (default: standard output)");
  count->set_config("--config", "",
                    "Read options from a TOML file (flags take precedence)");
  count->add_option("--dump-config", count_flags.dump_config,
                    "Write the effective options to a TOML file and continue")
      ->configurable(false);

  CommonFlags check_flags;
  std::int64_t check_paths = 100;
  double check_tol = -1.0;
  double check_r = 0.0;
  std::string check_strategy = "begin";
  auto* check = app.add_subcommand(
      "identity-check",
      "Verify the midpoint = left + half-derivative-in-dt conversion");
  add_common_flags(*check, check_flags, false);
  check->add_option("--paths", check_paths, "Number of sampled paths")
      ->capture_default_str();
  check->add_option("--tol", check_tol,
                    "Pass threshold for mean |residual| (default: derived)");
  check->add_option("--r", check_r, "Deletion exponent")->capture_default_str();
  check->add_option("--strategy", check_strategy,
                    "Deletion strategy: begin | random | end")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (sweep->parsed()) {
      apply_config_file(*sweep);
      return run_sweep(*sweep, sweep_flags);
    }
    if (mae->parsed()) {
      apply_config_file(*mae);
      return run_mae(*mae, mae_flags, iterations);
    }
    if (count->parsed()) {
      apply_config_file(*count);
      return run_count(*count, count_flags, count_n, count_K);
    }
    if (check->parsed()) {
      apply_config_file(*check);
      return run_identity_check(*check, check_flags, check_paths, check_tol,
                                check_r, check_strategy);
    }
  } catch (const std::invalid_argument& error) {
    std::cerr << "stochint: " << error.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& error) {
    std::cerr << "stochint: " << error.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}
