// Copyright 2026 the stochint authors
// SPDX-License-Identifier: Apache-2.0

#include "stochint/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "stochint/csv.hpp"
#include "stochint/kahan.hpp"
#include "stochint/partition.hpp"

namespace stochint {

void ExperimentConfig::validate() const {
  if (!(T > 0.0) || !std::isfinite(T)) {
    throw std::invalid_argument("ExperimentConfig: T must be positive");
  }
  if (n < 2) {
    throw std::invalid_argument("ExperimentConfig: n must be at least 2");
  }
  if (iterations < 1) {
    throw std::invalid_argument("ExperimentConfig: iterations must be >= 1");
  }
  for (const double r : r_values) {
    if (!(r >= 0.0 && r < 1.0)) {
      throw std::invalid_argument("ExperimentConfig: every r must lie in [0, 1)");
    }
  }
  if (threads < 0) {
    throw std::invalid_argument("ExperimentConfig: threads must be >= 0");
  }
}

double closed_form_ito_BdB(double terminal, double T) {
  return 0.5 * terminal * terminal - 0.5 * T;
}

double closed_form_strat_BdB(double terminal) {
  return 0.5 * terminal * terminal;
}

ClosedForm closed_form_for(SumForm form, const Integrand& phi) {
  if (phi.name != "identity") {
    throw std::invalid_argument(
        "closed_form_for: no closed form registered for integrand '" +
        phi.name + "'");
  }
  ClosedForm closed;
  closed.form = form;
  switch (form) {
    case SumForm::ItoLeft:
      closed.eval = [](double terminal, double T) {
        return closed_form_ito_BdB(terminal, T);
      };
      return closed;
    case SumForm::StratMidpoint:
    case SumForm::StratAverage:
      closed.eval = [](double terminal, double) {
        return closed_form_strat_BdB(terminal);
      };
      return closed;
    case SumForm::MeanSquare:
      break;
  }
  throw std::invalid_argument(
      "closed_form_for: no closed form registered for the mean-square form");
}

namespace {

struct Cell {
  DeletionStrategy strategy = DeletionStrategy::Begin;
  double r = 0.0;
  std::int64_t K = 0;
};

std::vector<Cell> make_cells(const ExperimentConfig& config) {
  std::vector<Cell> cells;
  cells.reserve(config.strategies.size() * config.r_values.size());
  for (const auto strategy : config.strategies) {
    for (const double r : config.r_values) {
      cells.push_back({strategy, r, k_of_n(config.n, r)});
    }
  }
  return cells;
}

/// Deletion draws are keyed by (master seed, path, strategy, K) so that a
/// cell's random sets are reproducible and unrelated cells never share them.
std::uint64_t deletion_seed(std::uint64_t master_seed, std::uint64_t path_index,
                            DeletionStrategy strategy, std::int64_t K) {
  auto h = rng::derive_stream_key(master_seed, path_index,
                                  rng::Domain::Deletions);
  h = rng::mix64(h + static_cast<std::uint64_t>(strategy) * rng::kGolden);
  return rng::mix64(h + static_cast<std::uint64_t>(K));
}

double evaluate_form(SumForm form, const BrownianPath& path,
                     const Integrand& phi, const DeletionSet& deletions) {
  switch (form) {
    case SumForm::ItoLeft:
      return ito_sum(path, phi, deletions).value;
    case SumForm::StratMidpoint:
      return strat_midpoint_sum(path, phi, deletions).value;
    case SumForm::StratAverage:
      return strat_average_sum(path, phi, deletions).value;
    case SumForm::MeanSquare:
      break;
  }
  throw std::invalid_argument("evaluate_form: unsupported sum form");
}

int resolve_threads(int configured) {
  if (configured > 0) {
    return configured;
  }
  if (const char* env = std::getenv("STOCHINT_THREADS")) {
    const int parsed = std::atoi(env);
    if (parsed > 0) {
      return parsed;
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs body(i) for i in [0, total) on up to `threads` workers, contiguous
/// blocks per worker. Results must be written to per-index slots; the caller
/// reduces them in index order afterwards, which is what makes the final
/// numbers independent of the thread count.
void run_indexed(std::int64_t total, int threads,
                 const std::function<void(std::int64_t)>& body) {
  const int workers =
      static_cast<int>(std::min<std::int64_t>(std::max(threads, 1), total));
  if (workers <= 1) {
    for (std::int64_t i = 0; i < total; ++i) {
      body(i);
    }
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  std::exception_ptr first_error;
  std::mutex error_mutex;
  for (int w = 0; w < workers; ++w) {
    const std::int64_t begin = total * w / workers;
    const std::int64_t end = total * (w + 1) / workers;
    pool.emplace_back([&, begin, end] {
      try {
        for (std::int64_t i = begin; i < end; ++i) {
          body(i);
        }
      } catch (...) {
        const std::scoped_lock lock(error_mutex);
        if (!first_error) {
          first_error = std::current_exception();
        }
      }
    });
  }
  for (auto& worker : pool) {
    worker.join();
  }
  if (first_error) {
    std::rethrow_exception(first_error);
  }
}

}  // namespace

std::vector<SweepRow> single_path_sweep(const ExperimentConfig& config) {
  config.validate();
  const auto phi = make_integrand(config.integrand);
  const auto closed = closed_form_for(config.form, phi);
  const auto partition = std::make_shared<const Partition>(
      make_equal_partition(config.T, config.n));
  const auto path = sample_path(partition, SeedSpec{config.master_seed, 0});
  const double reference = closed.eval(path.terminal(), config.T);

  std::vector<SweepRow> rows;
  for (const auto& cell : make_cells(config)) {
    const auto deletions =
        deletion_set(config.n, cell.K, cell.strategy,
                     deletion_seed(config.master_seed, 0, cell.strategy, cell.K));
    SweepRow row;
    row.form = config.form;
    row.strategy = cell.strategy;
    row.r = cell.r;
    row.K = cell.K;
    row.value = evaluate_form(config.form, path, phi, deletions);
    row.closed_form = reference;
    row.abs_error = std::abs(row.value - reference);
    rows.push_back(row);
  }
  return rows;
}

MaeReport mae_experiment(const ExperimentConfig& config) {
  config.validate();
  const auto phi = make_integrand(config.integrand);
  const auto closed = closed_form_for(config.form, phi);
  const auto partition = std::make_shared<const Partition>(
      make_equal_partition(config.T, config.n));
  const auto cells = make_cells(config);
  const std::int64_t N = config.iterations;

  std::vector<std::vector<double>> abs_errors(
      cells.size(), std::vector<double>(static_cast<std::size_t>(N)));

  run_indexed(N, resolve_threads(config.threads), [&](std::int64_t i) {
    const auto stream = static_cast<std::uint64_t>(i);
    BrownianPath shared;
    if (config.shared_paths) {
      shared = sample_path(partition, SeedSpec{config.master_seed, stream});
    }
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const auto& cell = cells[c];
      BrownianPath own;
      if (!config.shared_paths) {
        const auto cell_stream =
            static_cast<std::uint64_t>(c) * static_cast<std::uint64_t>(N) +
            stream;
        own = sample_path(partition, SeedSpec{config.master_seed, cell_stream});
      }
      const auto& path = config.shared_paths ? shared : own;
      const auto deletions = deletion_set(
          config.n, cell.K, cell.strategy,
          deletion_seed(config.master_seed, stream, cell.strategy, cell.K));
      const double value = evaluate_form(config.form, path, phi, deletions);
      abs_errors[c][static_cast<std::size_t>(i)] =
          std::abs(value - closed.eval(path.terminal(), config.T));
    }
  });

  MaeReport report;
  report.rows.reserve(cells.size());
  for (std::size_t c = 0; c < cells.size(); ++c) {
    KahanAccumulator<long double> total;
    for (std::int64_t i = 0; i < N; ++i) {
      total += abs_errors[c][static_cast<std::size_t>(i)];
    }
    const long double mean = static_cast<long double>(total) / N;
    KahanAccumulator<long double> squares;
    for (std::int64_t i = 0; i < N; ++i) {
      const long double dev = abs_errors[c][static_cast<std::size_t>(i)] - mean;
      squares += dev * dev;
    }
    const long double variance =
        N > 1 ? static_cast<long double>(squares) / (N - 1) : 0.0L;

    MaeRow row;
    row.form = config.form;
    row.strategy = cells[c].strategy;
    row.r = cells[c].r;
    row.K = cells[c].K;
    row.iterations = N;
    row.mae = static_cast<double>(mean);
    row.std_error = static_cast<double>(std::sqrt(variance / N));
    report.rows.push_back(row);
  }
  return report;
}

std::vector<OrderingVerdict> ordering_check(const MaeReport& report) {
  struct Level {
    const MaeRow* begin = nullptr;
    const MaeRow* random = nullptr;
    const MaeRow* end = nullptr;
    std::int64_t K = 0;
  };
  std::vector<double> order;
  std::vector<Level> levels;
  const auto level_of = [&](double r) -> Level& {
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (order[i] == r) {
        return levels[i];
      }
    }
    order.push_back(r);
    levels.emplace_back();
    return levels.back();
  };
  for (const auto& row : report.rows) {
    if (row.r == 0.0) {
      continue;
    }
    auto& level = level_of(row.r);
    level.K = row.K;
    switch (row.strategy) {
      case DeletionStrategy::Begin:
        level.begin = &row;
        break;
      case DeletionStrategy::Random:
        level.random = &row;
        break;
      case DeletionStrategy::End:
        level.end = &row;
        break;
    }
  }

  std::vector<OrderingVerdict> verdicts;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& level = levels[i];
    if (!level.begin || !level.random || !level.end) {
      throw std::invalid_argument(
          "ordering_check: need begin, random, and end rows at every r");
    }
    const auto gap_z = [](const MaeRow& lo, const MaeRow& hi) {
      const double gap = hi.mae - lo.mae;
      const double se = std::sqrt(lo.std_error * lo.std_error +
                                  hi.std_error * hi.std_error);
      return se > 0.0 ? gap / se : (gap >= 0.0 ? 0.0 : -1e9);
    };
    OrderingVerdict verdict;
    verdict.r = order[i];
    verdict.K = level.K;
    verdict.z_begin_random = gap_z(*level.begin, *level.random);
    verdict.z_random_end = gap_z(*level.random, *level.end);
    verdict.consistent =
        verdict.z_begin_random >= -2.0 && verdict.z_random_end >= -2.0;
    verdicts.push_back(verdict);
  }
  return verdicts;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "form,strategy,r,K,value,closed_form,abs_error\n";
  for (const auto& row : rows) {
    out << form_name(row.form) << ',' << strategy_name(row.strategy) << ','
        << csv::format_g17(row.r) << ',' << row.K << ','
        << csv::format_g17(row.value) << ',' << csv::format_g17(row.closed_form)
        << ',' << csv::format_g17(row.abs_error) << '\n';
  }
}

void write_mae_csv(std::ostream& out, const MaeReport& report) {
  out << "form,strategy,r,K,N,mae,stderr\n";
  for (const auto& row : report.rows) {
    out << form_name(row.form) << ',' << strategy_name(row.strategy) << ','
        << csv::format_g17(row.r) << ',' << row.K << ',' << row.iterations
        << ',' << csv::format_g17(row.mae) << ','
        << csv::format_g17(row.std_error) << '\n';
  }
}

}  // namespace stochint
