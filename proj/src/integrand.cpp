// Copyright 2026 the stochint authors
// SPDX-License-Identifier: Apache-2.0

#include "stochint/integrand.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace stochint {

namespace {

std::vector<double> parse_coefficients(const std::string& text,
                                       const std::string& id) {
  std::vector<double> coeffs;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece =
        text.substr(start, comma == std::string::npos ? comma : comma - start);
    try {
      std::size_t used = 0;
      coeffs.push_back(std::stod(piece, &used));
      if (used != piece.size()) {
        throw std::invalid_argument(piece);
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("make_integrand: bad number '" + piece +
                                  "' in '" + id + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return coeffs;
}

double horner(const std::vector<double>& coeffs, double x) {
  double value = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    value = value * x + *it;
  }
  return value;
}

}  // namespace

Integrand make_integrand(const std::string& id) {
  Integrand phi;
  phi.name = id;
  if (id == "identity") {
    phi.eval = [](double x, double) { return x; };
    phi.d_dx = [](double, double) { return 1.0; };
    phi.fourth_moment_bounded = true;
    return phi;
  }
  if (id == "sin") {
    phi.eval = [](double x, double) { return std::sin(x); };
    phi.d_dx = [](double x, double) { return std::cos(x); };
    phi.sup_bound = 1.0;
    phi.fourth_moment_bounded = true;
    return phi;
  }
  if (id == "abs") {
    phi.eval = [](double x, double) { return std::abs(x); };
    phi.fourth_moment_bounded = true;
    return phi;
  }
  if (id.starts_with("constant:")) {
    const auto coeffs = parse_coefficients(id.substr(9), id);
    if (coeffs.size() != 1) {
      throw std::invalid_argument("make_integrand: constant takes one value");
    }
    const double c = coeffs.front();
    phi.eval = [c](double, double) { return c; };
    phi.d_dx = [](double, double) { return 0.0; };
    phi.sup_bound = std::abs(c);
    phi.fourth_moment_bounded = true;
    return phi;
  }
  if (id.starts_with("poly:")) {
    const auto coeffs = parse_coefficients(id.substr(5), id);
    if (coeffs.empty()) {
      throw std::invalid_argument("make_integrand: poly needs coefficients");
    }
    std::vector<double> deriv;
    for (std::size_t i = 1; i < coeffs.size(); ++i) {
      deriv.push_back(static_cast<double>(i) * coeffs[i]);
    }
    phi.eval = [coeffs](double x, double) { return horner(coeffs, x); };
    phi.d_dx = [deriv](double x, double) { return horner(deriv, x); };
    phi.fourth_moment_bounded = true;
    return phi;
  }
  throw std::invalid_argument("make_integrand: unknown integrand '" + id +
                              "' (expected identity, constant:<c>, sin, "
                              "poly:<coeffs>, or abs)");
}

}  // namespace stochint
