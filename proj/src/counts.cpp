// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "stc/counts.hpp"

#include <algorithm>

#include "stc/rng.hpp"

namespace stc {

std::uint64_t Counts::get(const std::string &key) const {
  auto it = values.find(key);
  return it == values.end() ? 0 : it->second;
}

void Counts::validate() const {
  std::uint64_t total = 0;
  for (const auto &[k, v] : values)
    total += v;
  if (total != shots)
    throw Error("counts do not sum to the number of shots");
}

namespace {

std::string outcome_key(std::size_t outcome, int num_bits) {
  std::string key(num_bits, '0');
  for (int b = 0; b < num_bits; ++b)
    if (outcome & (std::size_t{1} << b))
      key[b] = '1';
  return key;
}

} // namespace

Counts sample_from_probabilities(std::span<const double> probabilities,
                                 int num_bits, std::uint64_t shots,
                                 std::uint64_t seed) {
  if (shots == 0)
    throw Error("sampling needs at least one shot");
  std::vector<double> cdf(probabilities.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    acc += std::max(0.0, probabilities[i]);
    cdf[i] = acc;
  }
  // Inverse-CDF draw per shot; a final clamp absorbs rounding in the tail.
  Rng rng(seed);
  Counts counts;
  counts.shots = shots;
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = rng.uniform() * acc;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    std::size_t idx = static_cast<std::size_t>(it - cdf.begin());
    if (idx >= cdf.size())
      idx = cdf.size() - 1;
    counts.values[outcome_key(idx, num_bits)] += 1;
  }
  return counts;
}

Counts sample_counts(const StateVector &state, std::span<const int> measured,
                     std::uint64_t shots, std::uint64_t seed) {
  auto probs = state.probabilities(measured);
  return sample_from_probabilities(probs, static_cast<int>(measured.size()),
                                   shots, seed);
}

Counts sample_counts(const DensityMatrix &state,
                     std::span<const int> measured, std::uint64_t shots,
                     std::uint64_t seed) {
  auto probs = state.probabilities(measured);
  return sample_from_probabilities(probs, static_cast<int>(measured.size()),
                                   shots, seed);
}

} // namespace stc
