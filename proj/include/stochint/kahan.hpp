// Copyright 2026 the stochint authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace stochint {

/// Compensated (Kahan) accumulator. Adding n terms of comparable magnitude
/// keeps the rounding error at O(eps) instead of O(n * eps), which matters
/// here because partial sums over 10^6 cells must survive the cancellation
/// in telescoping identities.
template <typename Value>
struct KahanAccumulator {
  Value sum = Value{0};
  Value compensation = Value{0};

  auto operator+=(Value value) -> void {
    const auto y = value - compensation;
    const auto t = sum + y;
    compensation = (t - sum) - y;
    sum = t;
  }

  operator Value() const { return sum; }
};

}  // namespace stochint
