// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "stc/resources.hpp"

#include <algorithm>

namespace stc {

ResourceEstimate estimate(std::int64_t copies, std::int64_t num_points,
                          std::int64_t feature_dim) {
  if (copies < 1)
    throw Error("the number of copies must be at least 1");
  if (num_points < 1)
    throw Error("the number of training points must be at least 1");
  if (feature_dim < 2)
    throw Error("the feature dimension must be at least 2");
  const std::int64_t lg_n = ceil_log2(feature_dim);
  const std::int64_t lg_m = std::max<std::int64_t>(1, ceil_log2(num_points));
  ResourceEstimate est;
  est.qubits = copies * (num_points + 2) * lg_n + 2 * lg_m + num_points + 1;
  est.toffoli =
      copies * (num_points + 1) * lg_n + num_points * (2 * lg_m - 1);
  est.cnot = 2 * (copies * (num_points + 1) * lg_n + num_points);
  return est;
}

} // namespace stc
