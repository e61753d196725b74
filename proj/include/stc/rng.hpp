// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <cstdint>
#include <random>

namespace stc {

/// Seeded PRNG used for every sampling operation.
///
/// The generator is std::mt19937_64, whose output sequence is fully specified
/// by the C++ standard, so a fixed seed reproduces bit-identical results on
/// any platform. Uniform doubles are derived from the top 53 bits of the raw
/// output rather than std::uniform_real_distribution, whose mapping is
/// implementation-defined.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  std::uint64_t raw() { return engine_(); }

private:
  std::mt19937_64 engine_;
};

} // namespace stc
