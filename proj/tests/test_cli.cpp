// Copyright 2026 the stochint authors
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end tests against the built CLI binary (path injected by the build
// as STOCHINT_CLI_PATH). Each invocation runs in a scratch directory under
// the system temp root.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#ifndef STOCHINT_CLI_PATH
#error "STOCHINT_CLI_PATH must point at the built stochint binary"
#endif

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream file(path);
  std::ostringstream text;
  text << file.rdbuf();
  return text.str();
}

std::string scratch_file(const char* stem) {
  static int counter = 0;
  std::ostringstream path;
  const char* tmp = std::getenv("TMPDIR");
  path << (tmp != nullptr ? tmp : "/tmp") << "/stochint_cli_" << getpid() << '_'
       << counter++ << '_' << stem;
  return path.str();
}

CliResult run_cli(const std::string& args) {
  const auto out_path = scratch_file("stdout");
  const auto err_path = scratch_file("stderr");
  const std::string command = std::string(STOCHINT_CLI_PATH) + " " + args +
                              " >" + out_path + " 2>" + err_path;
  const int raw = std::system(command.c_str());
  CliResult result;
  result.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return result;
}

std::size_t count_lines(const std::string& text) {
  std::size_t lines = 0;
  for (const char ch : text) {
    lines += ch == '\n' ? 1 : 0;
  }
  return lines;
}

std::vector<std::string> split_csv_line(const std::string& text,
                                        std::size_t line_index) {
  std::istringstream stream(text);
  std::string line;
  for (std::size_t i = 0; i <= line_index; ++i) {
    std::getline(stream, line);
  }
  std::vector<std::string> fields;
  std::istringstream line_stream(line);
  std::string field;
  while (std::getline(line_stream, field, ',')) {
    fields.push_back(field);
  }
  return fields;
}

}  // namespace

TEST_CASE("sweep writes one data row per cell") {
  const auto out = scratch_file("sweep.csv");
  const auto result = run_cli(
      "sweep --T 1 --n 10000 --r-list 0,0.1 --strategies begin --form ito "
      "--integrand identity --seed 7 --out " + out);
  CHECK(result.exit_code == 0);
  const auto text = slurp(out);
  std::remove(out.c_str());
  CHECK(count_lines(text) == 3);  // header + 2 cells
  CHECK(text.rfind("form,strategy,r,K,value,closed_form,abs_error\n", 0) == 0);
}

TEST_CASE("sweep defaults to standard output") {
  const auto result = run_cli(
      "sweep --T 1 --n 500 --r-list 0 --strategies begin,end --form "
      "strat-average --integrand identity --seed 3");
  CHECK(result.exit_code == 0);
  CHECK(count_lines(result.out) == 3);
  CHECK(result.out.rfind("form,strategy,", 0) == 0);
}

TEST_CASE("sweep rejects r = 1 with a usage exit code") {
  const auto result = run_cli(
      "sweep --n 100 --r-list 0,1.0 --strategies begin --form ito "
      "--integrand identity");
  CHECK(result.exit_code == 2);
  CHECK(result.err.find("r must lie in [0, 1)") != std::string::npos);
}

TEST_CASE("unknown flags and subcommands are usage errors") {
  CHECK(run_cli("sweep --definitely-not-a-flag 1").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);  // a subcommand is required
}

TEST_CASE("unwritable output path exits with the I/O code") {
  const auto result = run_cli(
      "sweep --n 100 --r-list 0 --strategies begin --form ito "
      "--integrand identity --out /nonexistent-dir/x.csv");
  CHECK(result.exit_code == 1);
}

TEST_CASE("mae at r = 0 emits identical rows for all strategies") {
  const auto result = run_cli(
      "mae --n 10000 --iters 1000 --r-list 0 --strategies begin,random,end "
      "--form ito --integrand identity --seed 1");
  CHECK(result.exit_code == 0);
  REQUIRE(count_lines(result.out) == 4);
  const auto begin_row = split_csv_line(result.out, 1);
  const auto random_row = split_csv_line(result.out, 2);
  const auto end_row = split_csv_line(result.out, 3);
  REQUIRE(begin_row.size() == 7);
  CHECK(begin_row[0] == "ito");
  CHECK(begin_row[1] == "begin");
  CHECK(random_row[1] == "random");
  CHECK(end_row[1] == "end");
  CHECK(begin_row[5] == random_row[5]);  // identical mae text
  CHECK(begin_row[5] == end_row[5]);
  CHECK(begin_row[4] == "1000");
}

TEST_CASE("mae with the averaged Stratonovich form is nearly zero at r = 0") {
  const auto result = run_cli(
      "mae --n 2000 --iters 100 --r-list 0 --strategies begin --form "
      "strat-average --integrand identity --seed 2");
  CHECK(result.exit_code == 0);
  const auto row = split_csv_line(result.out, 1);
  REQUIRE(row.size() == 7);
  CHECK(std::strtod(row[5].c_str(), nullptr) <= 1e-10);
}

TEST_CASE("mae rejects zero iterations") {
  const auto result = run_cli(
      "mae --n 100 --iters 0 --r-list 0 --strategies begin --form ito "
      "--integrand identity");
  CHECK(result.exit_code == 2);
}

TEST_CASE("mean-square form has no closed form and is a usage error") {
  const auto result = run_cli(
      "mae --n 100 --iters 5 --r-list 0 --strategies begin --form mean-square "
      "--integrand identity");
  CHECK(result.exit_code == 2);
  CHECK(result.err.find("closed form") != std::string::npos);
}

TEST_CASE("count prints exact values and enforces 0 < K < n") {
  auto result = run_cli("count --n 3 --K 1");
  CHECK(result.exit_code == 0);
  CHECK(result.out == "3\n");

  result = run_cli("count --n 4 --K 2");
  CHECK(result.exit_code == 0);
  CHECK(result.out == "18\n");

  result = run_cli("count --n 100 --K 20");
  CHECK(result.exit_code == 0);
  CHECK(result.out == "562018762621174738320267750\n");

  CHECK(run_cli("count --n 2 --K 2").exit_code == 2);
  CHECK(run_cli("count --n 2 --K 0").exit_code == 2);
  CHECK(run_cli("count --n 2").exit_code == 2);  // --K is required
}

TEST_CASE("identity-check passes with the derived tolerance") {
  const auto out = scratch_file("residuals.csv");
  const auto result = run_cli(
      "identity-check --T 1 --n 10000 --paths 100 --integrand identity "
      "--seed 7 --out " + out);
  CHECK(result.exit_code == 0);
  const auto text = slurp(out);
  std::remove(out.c_str());
  CHECK(count_lines(text) == 101);  // header + one row per path
  CHECK(text.rfind("path,residual\n", 0) == 0);
  CHECK(result.err.find("mean |residual|") != std::string::npos);
}

TEST_CASE("identity-check with zero tolerance fails on stochastic input") {
  const auto result = run_cli(
      "identity-check --n 1000 --paths 10 --integrand identity --seed 7 "
      "--tol 0");
  CHECK(result.exit_code == 3);
}

TEST_CASE("identity-check passes zero tolerance for a constant integrand") {
  const auto result = run_cli(
      "identity-check --n 1000 --paths 10 --integrand constant:2 --seed 7 "
      "--tol 0");
  CHECK(result.exit_code == 0);
}

TEST_CASE("identity-check rejects an integrand without derivative") {
  const auto result = run_cli(
      "identity-check --n 100 --paths 5 --integrand abs --seed 7");
  CHECK(result.exit_code == 2);
  CHECK(result.err.find("derivative") != std::string::npos);
}

TEST_CASE("identical invocations produce byte-identical CSV") {
  const auto out_a = scratch_file("a.csv");
  const auto out_b = scratch_file("b.csv");
  const std::string args =
      "mae --n 2000 --iters 50 --r-list 0,0.5 --strategies begin,random,end "
      "--form ito --integrand identity --seed 11 --out ";
  CHECK(run_cli(args + out_a).exit_code == 0);
  CHECK(run_cli(args + out_b).exit_code == 0);
  const auto text_a = slurp(out_a);
  const auto text_b = slurp(out_b);
  std::remove(out_a.c_str());
  std::remove(out_b.c_str());
  CHECK(!text_a.empty());
  CHECK(text_a == text_b);
}

TEST_CASE("config files round-trip the flags") {
  const auto config_path = scratch_file("config.toml");
  const auto out_a = scratch_file("direct.csv");
  const auto out_b = scratch_file("from_config.csv");

  // First run records its effective options; second run replays them.
  auto result = run_cli(
      "sweep --T 2 --n 1500 --r-list 0,0.25,0.5 --strategies end,begin "
      "--form strat-midpoint --integrand identity --seed 123 --dump-config " +
      config_path + " --out " + out_a);
  CHECK(result.exit_code == 0);
  result = run_cli("sweep --config " + config_path + " --out " + out_b);
  CHECK(result.exit_code == 0);

  const auto text_a = slurp(out_a);
  const auto text_b = slurp(out_b);
  std::remove(config_path.c_str());
  std::remove(out_a.c_str());
  std::remove(out_b.c_str());
  CHECK(!text_a.empty());
  CHECK(text_a == text_b);
}

TEST_CASE("flags override config file values") {
  const auto config_path = scratch_file("override.toml");
  {
    std::ofstream config(config_path);
    config << "n = 400\nr-list = \"0\"\nstrategies = \"begin\"\n"
           << "form = \"ito\"\nintegrand = \"identity\"\nseed = 5\n";
  }
  // --n on the command line beats n in the file: K = floor(900^0.5) = 30
  // would differ from floor(400^0.5) = 20 at r = 0.5.
  const auto result = run_cli("sweep --config " + config_path +
                              " --n 900 --r-list 0.5");
  std::remove(config_path.c_str());
  CHECK(result.exit_code == 0);
  const auto row = split_csv_line(result.out, 1);
  REQUIRE(row.size() == 7);
  CHECK(row[3] == "30");
}
