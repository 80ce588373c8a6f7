// Copyright 2026 the stochint authors
// SPDX-License-Identifier: Apache-2.0

#include "stochint/csv.hpp"

#include <cstdio>

namespace stochint::csv {

std::string format_g17(double value) {
  char buffer[40];
  const int written = std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return std::string(buffer, static_cast<std::size_t>(written));
}

}  // namespace stochint::csv
