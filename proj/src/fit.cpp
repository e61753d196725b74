// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "stc/fit.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace stc {

double fit_model(double theta, double amplitude, double phase_shift,
                 double w2) {
  const double s = std::sin((theta + phase_shift) / 2.0 + kPi / 4.0);
  return amplitude * (s * s - w2);
}

namespace {

struct LmState {
  Eigen::Vector3d params; // a, phase, w2
  double cost = 0.0;
  int iterations = 0;
  bool converged = false;
};

double cost_of(std::span<const double> thetas, std::span<const double> values,
               const Eigen::Vector3d &p) {
  double c = 0.0;
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    const double r = values[i] - fit_model(thetas[i], p(0), p(1), p(2));
    c += r * r;
  }
  return c;
}

LmState levenberg_marquardt(std::span<const double> thetas,
                            std::span<const double> values,
                            Eigen::Vector3d p) {
  const int max_iter = 200;
  double lambda = 1e-3;
  LmState state;
  state.params = p;
  state.cost = cost_of(thetas, values, p);
  const std::size_t n = thetas.size();

  for (int iter = 0; iter < max_iter; ++iter) {
    state.iterations = iter + 1;
    Eigen::Matrix3d jtj = Eigen::Matrix3d::Zero();
    Eigen::Vector3d jtr = Eigen::Vector3d::Zero();
    for (std::size_t i = 0; i < n; ++i) {
      const double th = thetas[i];
      const double s = std::sin((th + p(1)) / 2.0 + kPi / 4.0);
      const double r = values[i] - p(0) * (s * s - p(2));
      // residual gradient: dr/da, dr/dphase, dr/dw2
      Eigen::Vector3d g;
      g(0) = -(s * s - p(2));
      g(1) = -p(0) * std::cos(th + p(1)) / 2.0;
      g(2) = p(0);
      jtj += g * g.transpose();
      jtr += g * r;
    }
    Eigen::Matrix3d damped = jtj;
    for (int d = 0; d < 3; ++d)
      damped(d, d) += lambda * std::max(jtj(d, d), 1e-12);
    const Eigen::Vector3d delta = damped.ldlt().solve(-jtr);
    if (!delta.allFinite())
      break;
    const Eigen::Vector3d trial = p + delta;
    const double trial_cost = cost_of(thetas, values, trial);
    if (trial_cost < state.cost) {
      const double improvement = state.cost - trial_cost;
      p = trial;
      state.params = p;
      state.cost = trial_cost;
      lambda = std::max(lambda * 0.4, 1e-14);
      if (improvement < 1e-16 * (1.0 + state.cost) &&
          delta.norm() < 1e-12 * (1.0 + p.norm())) {
        state.converged = true;
        break;
      }
    } else {
      lambda *= 2.5;
      if (lambda > 1e12) {
        state.converged = true; // damping saturated; p is a local optimum
        break;
      }
    }
    if (delta.norm() < 1e-14 * (1.0 + p.norm())) {
      state.converged = true;
      break;
    }
  }
  return state;
}

} // namespace

FitResult fit_curve(std::span<const double> thetas,
                    std::span<const double> values) {
  if (thetas.size() != values.size())
    throw Error("fit needs matching theta and value arrays");
  if (thetas.size() < 4)
    throw Error("fit needs at least 4 samples");

  const auto [mn, mx] = std::minmax_element(values.begin(), values.end());
  const double a0 = std::max(*mx - *mn, 1e-6);

  LmState best = levenberg_marquardt(thetas, values, {a0, 0.0, 0.5});
  // Grid restart over the phase when the first run stalls on a poor optimum.
  const double scale = std::max(a0, 1e-3);
  if (best.cost > 1e-12 * thetas.size() * scale * scale) {
    for (double phase0 : {-0.5, 0.5}) {
      LmState alt = levenberg_marquardt(thetas, values, {a0, phase0, 0.5});
      if (alt.cost < best.cost)
        best = alt;
    }
  }

  FitResult result;
  result.amplitude = best.params(0);
  result.phase_shift = best.params(1);
  result.w2 = best.params(2);
  result.residual_norm = std::sqrt(best.cost);
  result.iterations = best.iterations;
  if (!best.converged) {
    throw FitError("curve fit did not converge after " +
                       std::to_string(best.iterations) + " iterations",
                   result);
  }
  return result;
}

} // namespace stc
