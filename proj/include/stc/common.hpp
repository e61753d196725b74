// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace stc {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Error type for all contract violations (bad arguments, exceeded caps,
/// malformed inputs). The message is meant to be surfaced as-is.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string &what) : std::runtime_error(what) {}
};

inline int ceil_log2(long long n) {
  int k = 0;
  long long c = 1;
  while (c < n) {
    c <<= 1;
    ++k;
  }
  return k;
}

} // namespace stc
