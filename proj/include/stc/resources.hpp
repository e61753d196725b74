// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <cstdint>

#include "stc/common.hpp"

namespace stc {

struct ResourceEstimate {
  std::int64_t qubits = 0;
  std::int64_t toffoli = 0;
  std::int64_t cnot = 0;
};

/// Closed-form cost of the product-state construction for M training points
/// of dimension N with n copies:
///   qubits  = n(M+2) ceil(lg N) + 2 ceil(lg M) + M + 1
///   toffoli = n(M+1) ceil(lg N) + M (2 ceil(lg M) - 1)
///   cnot    = 2 (n(M+1) ceil(lg N) + M)
/// ceil(lg M) is taken as 1 at M = 1 so the label-register accounting stays
/// positive (the formulas are not defined for that degenerate case upstream).
ResourceEstimate estimate(std::int64_t copies, std::int64_t num_points,
                          std::int64_t feature_dim);

} // namespace stc
