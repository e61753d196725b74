// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include <doctest.h>

#include <cmath>

#include "stc/serialize.hpp"
#include "stc/sweep.hpp"

using namespace stc;

TEST_CASE("theta grid matches the experiment protocol") {
  SweepConfig config;
  auto grid = theta_grid(config);
  CHECK(grid.size() == 63);
  CHECK(grid.front() == doctest::Approx(0.0));
  CHECK(grid.back() == doctest::Approx(6.2));
}

TEST_CASE("exact sweep follows the closed form") {
  SweepConfig config;
  SweepResult result = sweep(config);
  REQUIRE(result.rows.size() == 63);
  for (const auto &row : result.rows)
    CHECK(std::abs(row.expectation - toy_expectation(row.theta)) < 1e-10);
}

TEST_CASE("exact hadamard sweep is identically zero") {
  SweepConfig config;
  config.classifier = ClassifierKind::Hadamard;
  for (const auto &row : sweep(config).rows)
    CHECK(std::abs(row.expectation) < 1e-10);
}

TEST_CASE("forking sweep equals the direct sweep row by row") {
  SweepConfig direct;
  direct.theta_step = 0.5;
  SweepConfig forking = direct;
  forking.classifier = ClassifierKind::SwapTestForking;
  auto a = sweep(direct);
  auto b = sweep(forking);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i)
    CHECK(std::abs(a.rows[i].expectation - b.rows[i].expectation) < 1e-10);
}

TEST_CASE("sampled sweep is seed-deterministic and concentrated") {
  SweepConfig config;
  config.backend = SweepBackend::Sampled;
  config.seed = 99;
  SweepResult a = sweep(config);
  SweepResult b = sweep(config);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].c00 == b.rows[i].c00);
    CHECK(a.rows[i].c11 == b.rows[i].c11);
    // counts formula
    const auto &row = a.rows[i];
    const double recomputed =
        (static_cast<double>(row.c00) - static_cast<double>(row.c01) -
         static_cast<double>(row.c10) + static_cast<double>(row.c11)) /
        static_cast<double>(row.shots);
    CHECK(std::abs(row.expectation - recomputed) < 1e-12);
    // binomial concentration at 4 sigma
    const double exact = toy_expectation(row.theta);
    const double sigma = std::sqrt((1.0 - exact * exact) / 8192.0);
    CHECK(std::abs(row.expectation - exact) <= 4.0 * sigma + 1e-12);
  }
}

TEST_CASE("per-theta seeds differ") {
  SweepConfig config;
  config.backend = SweepBackend::Sampled;
  config.theta_start = 1.0;
  config.theta_end = 1.35;
  config.theta_step = 0.1;
  SweepResult result = sweep(config);
  REQUIRE(result.rows.size() == 4);
  bool all_equal = true;
  for (std::size_t i = 1; i < result.rows.size(); ++i)
    if (result.rows[i].c00 != result.rows[0].c00)
      all_equal = false;
  CHECK(!all_equal);
}

TEST_CASE("noisy backend needs device parameters") {
  SweepConfig config;
  config.backend = SweepBackend::Noisy;
  CHECK_THROWS_AS(sweep(config), Error);
}

TEST_CASE("fit recovers the generator on exact data") {
  SweepConfig config;
  SweepResult result = sweep(config);
  FitResult fr = fit_sweep(result);
  CHECK(std::abs(fr.amplitude - 1.0) < 1e-6);
  CHECK(std::abs(fr.phase_shift) < 1e-6);
  CHECK(std::abs(fr.w2 - 0.5) < 1e-6);
  CHECK(fr.residual_norm < 1e-7);
}

TEST_CASE("fit recovers scale, shift and offset from synthetic data") {
  std::vector<double> thetas, values;
  const double a = 0.65, phase = 0.12, w2 = 0.53;
  for (double t = 0.0; t < 2 * kPi; t += 0.1) {
    thetas.push_back(t);
    values.push_back(fit_model(t, a, phase, w2));
  }
  FitResult fr = fit_curve(thetas, values);
  CHECK(std::abs(fr.amplitude - a) < 1e-6);
  CHECK(std::abs(fr.phase_shift - phase) < 1e-6);
  CHECK(std::abs(fr.w2 - w2) < 1e-6);
}

TEST_CASE("fit needs at least four samples") {
  std::vector<double> t{0.0, 1.0, 2.0};
  std::vector<double> v{0.1, 0.2, 0.3};
  CHECK_THROWS_AS(fit_curve(t, v), Error);
}

TEST_CASE("sharpening curves table") {
  SweepConfig grid_cfg;
  auto thetas = theta_grid(grid_cfg);
  SharpeningTable table = sharpening_curves({1, 10, 100}, thetas);
  REQUIRE(table.curves.size() == 3);
  // n = 1 column is the closed form
  for (std::size_t j = 0; j < thetas.size(); ++j)
    CHECK(table.curves[0][j] ==
          doctest::Approx(toy_expectation(thetas[j])).epsilon(1e-12));
  // all n agree at theta = pi/2 where the fidelities are 0 and 1
  for (int n : {1, 10, 100})
    CHECK(toy_expectation(kPi / 2, n) == doctest::Approx(0.5).epsilon(1e-12));
  // strictly shrinking decision region
  const double w1 = region_width(thetas, table.curves[0], 0.25, 0.1);
  const double w10 = region_width(thetas, table.curves[1], 0.25, 0.1);
  const double w100 = region_width(thetas, table.curves[2], 0.25, 0.1);
  CHECK(w1 > w10);
  CHECK(w10 > w100);
}
