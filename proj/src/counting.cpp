// Copyright 2026 the stochint authors
// SPDX-License-Identifier: Apache-2.0

#include "stochint/counting.hpp"

#include <stdexcept>

namespace stochint {

mpz_class count_incomplete_sums(std::int64_t n, std::int64_t K) {
  if (n < 1 || K <= 0 || K >= n) {
    throw std::invalid_argument(
        "count_incomplete_sums: arguments must satisfy 0 < K < n");
  }
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(K));
  mpz_class subsets = 1;
  subsets <<= static_cast<unsigned long>(K);
  subsets -= 1;
  return binom * subsets;
}

}  // namespace stochint
