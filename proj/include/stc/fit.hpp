// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <span>
#include <vector>

#include "stc/common.hpp"

namespace stc {

/// Parameters of the reference model
///   f(a, phase, w2)(theta) = a (sin^2((theta + phase)/2 + pi/4) - w2)
/// fitted to a classification curve.
struct FitResult {
  double amplitude = 0.0;
  double phase_shift = 0.0;
  double w2 = 0.5;
  double residual_norm = 0.0;
  int iterations = 0;
};

/// Thrown when the fit fails to converge; carries the best iterate found.
class FitError : public Error {
public:
  FitError(const std::string &what, FitResult best)
      : Error(what), best_iterate(best) {}
  FitResult best_iterate;
};

double fit_model(double theta, double amplitude, double phase_shift,
                 double w2);

/// Levenberg-Marquardt least squares over (a, phase, w2) with analytic
/// Jacobian. Initialization: a = max - min of the data, phase = 0, w2 = 0.5;
/// if the residual stagnates, restarts on a phase grid {-0.5, 0, 0.5} and
/// keeps the best. Needs at least 4 samples.
FitResult fit_curve(std::span<const double> thetas,
                    std::span<const double> values);

} // namespace stc
