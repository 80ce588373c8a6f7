// Copyright 2026 the stochint authors
// SPDX-License-Identifier: Apache-2.0

#include "stochint/integrand.hpp"

#include <cmath>
#include <stdexcept>

#include <doctest.h>

using namespace stochint;

TEST_CASE("identity integrand") {
  const auto phi = make_integrand("identity");
  CHECK(phi.eval(3.5, 0.2) == 3.5);
  CHECK(phi.d_dx(3.5, 0.2) == 1.0);
  CHECK_FALSE(phi.sup_bound.has_value());
  CHECK(phi.fourth_moment_bounded);
}

TEST_CASE("constant integrand parses its value") {
  const auto phi = make_integrand("constant:-2.5");
  CHECK(phi.eval(100.0, 0.0) == -2.5);
  CHECK(phi.d_dx(100.0, 0.0) == 0.0);
  REQUIRE(phi.sup_bound.has_value());
  CHECK(*phi.sup_bound == 2.5);
}

TEST_CASE("sin integrand is bounded with cosine derivative") {
  const auto phi = make_integrand("sin");
  CHECK(phi.eval(1.0, 0.0) == doctest::Approx(std::sin(1.0)));
  CHECK(phi.d_dx(1.0, 0.0) == doctest::Approx(std::cos(1.0)));
  REQUIRE(phi.sup_bound.has_value());
  CHECK(*phi.sup_bound == 1.0);
}

TEST_CASE("poly integrand evaluates coefficients low to high") {
  // 1 - 2x + 0.5x^2 at x = 3: 1 - 6 + 4.5 = -0.5; derivative -2 + x = 1.
  const auto phi = make_integrand("poly:1,-2,0.5");
  CHECK(phi.eval(3.0, 0.0) == doctest::Approx(-0.5));
  CHECK(phi.d_dx(3.0, 0.0) == doctest::Approx(1.0));

  const auto constant_poly = make_integrand("poly:4");
  CHECK(constant_poly.eval(9.0, 0.0) == 4.0);
  CHECK(constant_poly.d_dx(9.0, 0.0) == 0.0);
}

TEST_CASE("abs integrand has no derivative registered") {
  const auto phi = make_integrand("abs");
  CHECK(phi.eval(-4.0, 0.0) == 4.0);
  CHECK_FALSE(static_cast<bool>(phi.d_dx));
}

TEST_CASE("malformed integrand ids are rejected") {
  CHECK_THROWS_AS(make_integrand("nope"), std::invalid_argument);
  CHECK_THROWS_AS(make_integrand("constant:"), std::invalid_argument);
  CHECK_THROWS_AS(make_integrand("constant:1,2"), std::invalid_argument);
  CHECK_THROWS_AS(make_integrand("poly:"), std::invalid_argument);
  CHECK_THROWS_AS(make_integrand("poly:1,x"), std::invalid_argument);
  CHECK_THROWS_AS(make_integrand(""), std::invalid_argument);
}
