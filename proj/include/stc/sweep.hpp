// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stc/classifier.hpp"
#include "stc/fit.hpp"
#include "stc/noise.hpp"
#include "stc/transpile.hpp"

namespace stc {

enum class SweepBackend { Exact, Sampled, Noisy };

/// Experiment protocol for the example-problem classification curve:
/// theta from `theta_start` (inclusive) to `theta_end` (exclusive) in steps
/// of `theta_step`; the default grid 0 .. 2 pi step 0.1 yields 63 points.
struct SweepConfig {
  ClassifierKind classifier = ClassifierKind::SwapTest;
  int copies = 1;
  double theta_start = 0.0;
  double theta_end = 2.0 * kPi;
  double theta_step = 0.1;
  std::uint64_t shots = 8192;
  std::uint64_t seed = 7;
  double w2 = 0.5;
  SweepBackend backend = SweepBackend::Exact;
  std::string device_path; // required for the noisy backend
  int jobs = 0;            // 0 = hardware concurrency
};

struct SweepRow {
  double theta = 0.0;
  double expectation = 0.0;
  std::uint64_t c00 = 0, c01 = 0, c10 = 0, c11 = 0;
  std::uint64_t shots = 0;
};

struct SweepResult {
  SweepConfig config;
  std::vector<SweepRow> rows;
  std::string timestamp;
};

std::vector<double> theta_grid(const SweepConfig &config);

/// Runs the sweep. Exact rows carry the analytic expectation and zero
/// counts; sampled and noisy rows carry counts with
/// expectation = (c00 - c01 - c10 + c11) / shots. Per-theta jobs run on a
/// work pool with derived seeds (seed + index), so results are independent
/// of the thread schedule. The noisy backend density-matrix-evolves the
/// transpiled example circuit under the device noise model, applies readout
/// confusion to the outcome distribution and samples it.
SweepResult sweep(const SweepConfig &config,
                  std::optional<DeviceParams> device = {});

/// Fits the reference model to a sweep's (theta, expectation) rows.
FitResult fit_sweep(const SweepResult &result);

/// Analytic kernel curves for several copy counts on a shared theta grid;
/// curves[i][j] is the expectation for copies n_list[i] at thetas[j].
struct SharpeningTable {
  std::vector<int> n_list;
  std::vector<double> thetas;
  std::vector<std::vector<double>> curves;
};

SharpeningTable sharpening_curves(const std::vector<int> &n_list,
                                  const std::vector<double> &thetas,
                                  double w2 = 0.5);

/// Width (in radians, on the given grid) of the region where the curve
/// exceeds `level`; the sharpening property is that this shrinks as n grows.
double region_width(const std::vector<double> &thetas,
                    const std::vector<double> &curve, double level,
                    double step);

} // namespace stc
