// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>

#include "stc/common.hpp"
#include "stc/density_matrix.hpp"
#include "stc/statevector.hpp"

namespace stc {

/// Measurement statistics: bit-string -> count. The i-th character of a key
/// (from the left) is the outcome of the i-th measured qubit, so measuring
/// (ancilla, label) yields keys "al" in that order.
struct Counts {
  std::map<std::string, std::uint64_t> values;
  std::uint64_t shots = 0;

  std::uint64_t get(const std::string &key) const;
  /// Sum over keys must equal shots; throws otherwise.
  void validate() const;
};

/// Multinomial sample of `shots` outcomes from `probabilities` (inverse-CDF
/// over the cumulative distribution, one uniform draw per shot).
/// Deterministic given the seed. num_bits fixes the key width.
Counts sample_from_probabilities(std::span<const double> probabilities,
                                 int num_bits, std::uint64_t shots,
                                 std::uint64_t seed);

Counts sample_counts(const StateVector &state, std::span<const int> measured,
                     std::uint64_t shots, std::uint64_t seed);

Counts sample_counts(const DensityMatrix &state, std::span<const int> measured,
                     std::uint64_t shots, std::uint64_t seed);

} // namespace stc
