// Copyright 2026 the stochint authors
// SPDX-License-Identifier: Apache-2.0
//
// Python bindings for the stochint core. The module mirrors the C++ API
// closely: factories return value types, experiment entry points take an
// ExperimentConfig, and every stochastic quantity is keyed by explicit
// (master_seed, stream_index) pairs so results reproduce bit for bit.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <string>

#include "stochint/brownian.hpp"
#include "stochint/counting.hpp"
#include "stochint/deletion.hpp"
#include "stochint/experiments.hpp"
#include "stochint/integrand.hpp"
#include "stochint/partition.hpp"
#include "stochint/rng.hpp"
#include "stochint/sums.hpp"

namespace py = pybind11;
using namespace stochint;

namespace {

/// GMP integer -> arbitrary-precision Python int, via the decimal string.
py::int_ to_python_int(const mpz_class& value) {
  const std::string digits = value.get_str();
  PyObject* object = PyLong_FromString(digits.c_str(), nullptr, 10);
  if (object == nullptr) {
    throw py::error_already_set();
  }
  return py::reinterpret_steal<py::int_>(object);
}

}  // namespace

PYBIND11_MODULE(stochint, m) {
  m.doc() =
      "Complete and incomplete Riemann-Stieltjes sums for stochastic "
      "integrals on Brownian paths";

  py::class_<Partition, std::shared_ptr<Partition>>(m, "Partition")
      .def_readonly("duration", &Partition::duration)
      .def_readonly("n", &Partition::n)
      .def_readonly("nodes", &Partition::nodes)
      .def_readonly("mesh", &Partition::mesh)
      .def("dt", &Partition::dt, py::arg("j"))
      .def("__repr__", [](const Partition& p) {
        return "Partition(T=" + std::to_string(p.duration) +
               ", n=" + std::to_string(p.n) + ")";
      });

  m.def(
      "make_equal_partition",
      [](double T, std::int64_t n) {
        return std::make_shared<Partition>(make_equal_partition(T, n));
      },
      py::arg("T"), py::arg("n"),
      "Equally spaced partition of [0, T] into n cells.");

  m.def("k_of_n", &k_of_n, py::arg("n"), py::arg("r"),
        "Deletion count K = floor(n^r); r = 0 maps to K = 0.");

  py::enum_<DeletionStrategy>(m, "DeletionStrategy")
      .value("Begin", DeletionStrategy::Begin)
      .value("Random", DeletionStrategy::Random)
      .value("End", DeletionStrategy::End);

  py::class_<DeletionSet>(m, "DeletionSet")
      .def_readonly("n", &DeletionSet::n)
      .def_readonly("strategy", &DeletionSet::strategy)
      .def_readonly("indices", &DeletionSet::indices)
      .def("k", &DeletionSet::k);

  m.def("deletion_set", &deletion_set, py::arg("n"), py::arg("K"),
        py::arg("strategy"), py::arg("seed") = 0,
        "Deletion set of K indices in {0..n-1}; seed matters only for "
        "DeletionStrategy.Random.");

  m.def(
      "count_incomplete_sums",
      [](std::int64_t n, std::int64_t K) {
        return to_python_int(count_incomplete_sums(n, K));
      },
      py::arg("n"), py::arg("K"),
      "Number of distinct incomplete sums with exactly K deletions: "
      "C(n, K) * (2^K - 1).");

  py::class_<BrownianPath>(m, "BrownianPath")
      .def_readonly("values", &BrownianPath::values)
      .def_property_readonly(
          "partition",
          [](const BrownianPath& path) {
            return std::const_pointer_cast<Partition>(path.partition);
          })
      .def("n", &BrownianPath::n)
      .def("terminal", &BrownianPath::terminal)
      .def("increment", &BrownianPath::increment, py::arg("j"))
      .def("value_at", &BrownianPath::value_at, py::arg("t"));

  m.def(
      "sample_path",
      [](std::shared_ptr<Partition> partition, std::uint64_t master_seed,
         std::uint64_t stream_index) {
        return sample_path(std::move(partition),
                           SeedSpec{master_seed, stream_index});
      },
      py::arg("partition"), py::arg("master_seed"),
      py::arg("stream_index") = 0,
      "Brownian path on the partition; equal seeds give bit-identical "
      "paths.");

  py::class_<IncrementMoments>(m, "IncrementMoments")
      .def_readonly("mean", &IncrementMoments::mean)
      .def_readonly("variance", &IncrementMoments::variance)
      .def_readonly("fourth_moment", &IncrementMoments::fourth_moment);

  m.def(
      "increment_moments",
      [](const std::vector<BrownianPath>& paths, std::int64_t j) {
        return increment_moments(paths, j);
      },
      py::arg("paths"), py::arg("j"),
      "Sample mean, variance, and raw fourth moment of increment j across "
      "paths sharing one partition.");

  py::class_<Integrand>(m, "Integrand")
      .def_readonly("name", &Integrand::name)
      .def_property_readonly(
          "has_derivative",
          [](const Integrand& phi) { return static_cast<bool>(phi.d_dx); })
      .def(
          "__call__",
          [](const Integrand& phi, double x, double t) {
            return phi.eval(x, t);
          },
          py::arg("x"), py::arg("t") = 0.0);

  m.def("make_integrand", &make_integrand, py::arg("id"),
        "Integrand by id: identity, sin, abs, constant:<c>, "
        "poly:<c0,c1,...>.");

  py::enum_<SumForm>(m, "SumForm")
      .value("ItoLeft", SumForm::ItoLeft)
      .value("StratMidpoint", SumForm::StratMidpoint)
      .value("StratAverage", SumForm::StratAverage)
      .value("MeanSquare", SumForm::MeanSquare);

  py::enum_<URule>(m, "URule")
      .value("Left", URule::Left)
      .value("Right", URule::Right)
      .value("Midpoint", URule::Midpoint)
      .value("RandomInCell", URule::RandomInCell);

  py::class_<SumResult>(m, "SumResult")
      .def_readonly("value", &SumResult::value)
      .def_readonly("kept_terms", &SumResult::kept_terms)
      .def_readonly("deleted_terms", &SumResult::deleted_terms)
      .def_readonly("form", &SumResult::form)
      .def("__repr__", [](const SumResult& result) {
        return "SumResult(value=" + std::to_string(result.value) +
               ", kept=" + std::to_string(result.kept_terms) +
               ", deleted=" + std::to_string(result.deleted_terms) + ")";
      });

  m.def("ito_sum", &ito_sum, py::arg("path"), py::arg("phi"),
        py::arg("deletions"));
  m.def("strat_midpoint_sum", &strat_midpoint_sum, py::arg("path"),
        py::arg("phi"), py::arg("deletions"));
  m.def("strat_average_sum", &strat_average_sum, py::arg("path"),
        py::arg("phi"), py::arg("deletions"));
  m.def(
      "mean_square_sum",
      [](const BrownianPath& path,
         const std::function<double(double, const BrownianPath&)>& eval,
         URule u_rule, const DeletionSet& deletions, std::uint64_t master_seed,
         std::uint64_t stream_index) {
        return mean_square_sum(path, MeanSquareProcess{eval, u_rule},
                               deletions, SeedSpec{master_seed, stream_index});
      },
      py::arg("path"), py::arg("eval"), py::arg("u_rule"),
      py::arg("deletions"), py::arg("master_seed") = 0,
      py::arg("stream_index") = 0,
      "Mean-square (dt) sum of eval(t, path) with in-cell points placed by "
      "u_rule; the seed matters only for URule.RandomInCell.");
  m.def("deleted_part", &deleted_part, py::arg("path"), py::arg("phi"),
        py::arg("deletions"), py::arg("form"),
        "Sum of the given form's terms over the deleted cells only.");
  m.def("conversion_residual", &conversion_residual, py::arg("path"),
        py::arg("phi"), py::arg("deletions"),
        "Midpoint sum minus Ito sum minus half the dPhi/dx dt sum over the "
        "same kept cells.");

  m.def("closed_form_ito_BdB", &closed_form_ito_BdB, py::arg("terminal"),
        py::arg("T"));
  m.def("closed_form_strat_BdB", &closed_form_strat_BdB, py::arg("terminal"));

  py::class_<ExperimentConfig>(m, "ExperimentConfig")
      .def(py::init<>())
      .def_readwrite("T", &ExperimentConfig::T)
      .def_readwrite("n", &ExperimentConfig::n)
      .def_readwrite("r_values", &ExperimentConfig::r_values)
      .def_readwrite("strategies", &ExperimentConfig::strategies)
      .def_readwrite("iterations", &ExperimentConfig::iterations)
      .def_readwrite("form", &ExperimentConfig::form)
      .def_readwrite("integrand", &ExperimentConfig::integrand)
      .def_readwrite("master_seed", &ExperimentConfig::master_seed)
      .def_readwrite("shared_paths", &ExperimentConfig::shared_paths)
      .def_readwrite("threads", &ExperimentConfig::threads)
      .def("validate", &ExperimentConfig::validate);

  py::class_<SweepRow>(m, "SweepRow")
      .def_readonly("form", &SweepRow::form)
      .def_readonly("strategy", &SweepRow::strategy)
      .def_readonly("r", &SweepRow::r)
      .def_readonly("K", &SweepRow::K)
      .def_readonly("value", &SweepRow::value)
      .def_readonly("closed_form", &SweepRow::closed_form)
      .def_readonly("abs_error", &SweepRow::abs_error);

  py::class_<MaeRow>(m, "MaeRow")
      .def_readonly("form", &MaeRow::form)
      .def_readonly("strategy", &MaeRow::strategy)
      .def_readonly("r", &MaeRow::r)
      .def_readonly("K", &MaeRow::K)
      .def_readonly("iterations", &MaeRow::iterations)
      .def_readonly("mae", &MaeRow::mae)
      .def_readonly("std_error", &MaeRow::std_error);

  py::class_<MaeReport>(m, "MaeReport")
      .def_readonly("rows", &MaeReport::rows);

  py::class_<OrderingVerdict>(m, "OrderingVerdict")
      .def_readonly("r", &OrderingVerdict::r)
      .def_readonly("K", &OrderingVerdict::K)
      .def_readonly("consistent", &OrderingVerdict::consistent)
      .def_readonly("z_begin_random", &OrderingVerdict::z_begin_random)
      .def_readonly("z_random_end", &OrderingVerdict::z_random_end);

  m.def("single_path_sweep", &single_path_sweep, py::arg("config"),
        "Every (strategy, r) cell evaluated on the stream-0 path.");
  m.def("mae_experiment", &mae_experiment, py::arg("config"),
        "Monte Carlo mean absolute error per (strategy, r) cell; "
        "bit-identical for any thread count.");
  m.def("ordering_check", &ordering_check, py::arg("report"),
        "Per-r verdicts on MAE(begin) <= MAE(random) <= MAE(end) with two "
        "combined standard errors of slack.");
}
