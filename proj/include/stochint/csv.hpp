// Copyright 2026 the stochint authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

namespace stochint::csv {

/// Formats a double with 17 significant digits ("%.17g"), enough for exact
/// binary round-trip, so emitted CSV is bit-reproducible across runs.
std::string format_g17(double value);

}  // namespace stochint::csv
