// Copyright 2026 the stochint authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include <gmpxx.h>

namespace stochint {

/// Number of distinct incomplete sums reachable from a partition with n
/// cells when up to K indices may be deleted: C(n, K) * (2^K - 1).
/// Exact integer arithmetic; the value overflows 64 bits already around
/// n = 100, K = 20. Requires 0 < K < n; throws std::invalid_argument
/// otherwise.
mpz_class count_incomplete_sums(std::int64_t n, std::int64_t K);

}  // namespace stochint
