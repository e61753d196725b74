// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "stc/sweep.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <ctime>
#include <mutex>
#include <thread>

#include "stc/counts.hpp"

namespace stc {

std::vector<double> theta_grid(const SweepConfig &config) {
  if (config.theta_step <= 0.0)
    throw Error("theta step must be positive");
  std::vector<double> grid;
  for (std::size_t k = 0;; ++k) {
    const double theta = config.theta_start + k * config.theta_step;
    if (theta >= config.theta_end - 1e-12)
      break;
    grid.push_back(theta);
  }
  if (grid.empty())
    throw Error("theta grid is empty");
  return grid;
}

namespace {

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

double expectation_from_counts(const Counts &counts) {
  const double n = static_cast<double>(counts.shots);
  return (static_cast<double>(counts.get("00")) -
          static_cast<double>(counts.get("01")) -
          static_cast<double>(counts.get("10")) +
          static_cast<double>(counts.get("11"))) /
         n;
}

SweepRow row_from_counts(double theta, const Counts &counts) {
  SweepRow row;
  row.theta = theta;
  row.shots = counts.shots;
  row.c00 = counts.get("00");
  row.c01 = counts.get("01");
  row.c10 = counts.get("10");
  row.c11 = counts.get("11");
  row.expectation = expectation_from_counts(counts);
  return row;
}

/// Exact outcome distribution over (ancilla, label) for one theta, on the
/// requested classifier construction.
std::vector<double> exact_distribution(const SweepConfig &config,
                                       double theta) {
  const Dataset dataset = toy_dataset(config.w2);
  const TestPoint test = toy_test(theta);
  switch (config.classifier) {
  case ClassifierKind::Hadamard: {
    StateVector psi = prepare_hadamard_state(dataset, test);
    GateOp h = gate::h(0);
    psi.apply_matrix(h.targets, base_matrix(h));
    const int wires[] = {0, 1 + dataset.data_qubits()};
    return psi.probabilities(wires);
  }
  case ClassifierKind::SwapTest: {
    StateVector psi = prepare_swaptest_state(dataset, test, config.copies);
    GateOp h = gate::h(0);
    const int nw = config.copies * dataset.data_qubits();
    psi.apply_matrix(h.targets, base_matrix(h));
    const Control ctrl[] = {{0, true}};
    for (int b = 0; b < nw; ++b) {
      GateOp sw = gate::swap(1 + b, 1 + nw + b);
      psi.apply_matrix(sw.targets, base_matrix(sw), ctrl);
    }
    psi.apply_matrix(h.targets, base_matrix(h));
    const int wires[] = {0, 1 + 2 * nw};
    return psi.probabilities(wires);
  }
  case ClassifierKind::SwapTestForking: {
    Circuit circ = build_forking_circuit(dataset, test, config.copies);
    StateVector psi = simulate_statevector(circ);
    const int wires[] = {0, circ.reg("l").start};
    return psi.probabilities(wires);
  }
  }
  throw Error("unknown classifier kind");
}

double distribution_expectation(const std::vector<double> &probs) {
  return probs[0] - probs[1] - probs[2] + probs[3];
}

} // namespace

SweepResult sweep(const SweepConfig &config,
                  std::optional<DeviceParams> device) {
  if (config.backend != SweepBackend::Exact && config.shots == 0)
    throw Error("sampled and noisy sweeps need shots > 0");
  if (config.copies < 1)
    throw Error("the number of copies must be at least 1");
  if (config.classifier == ClassifierKind::Hadamard && config.copies != 1)
    throw Error("the interference classifier takes a single data copy");
  std::optional<NoiseModel> noise;
  CouplingMap coupling = ourense_coupling();
  if (config.backend == SweepBackend::Noisy) {
    if (!device)
      throw Error("the noisy backend needs device parameters");
    if (config.classifier != ClassifierKind::SwapTest || config.copies != 1)
      throw Error("the noisy backend models the 5-qubit example circuit "
                  "(swaptest, one copy)");
    noise = build_noise_model(*device);
  }

  const auto grid = theta_grid(config);
  SweepResult result;
  result.config = config;
  result.timestamp = utc_timestamp();
  result.rows.resize(grid.size());

  const double alpha = 2.0 * std::asin(std::sqrt(config.w2));

  auto run_one = [&](std::size_t idx) {
    const double theta = grid[idx];
    const std::uint64_t job_seed = config.seed + idx;
    switch (config.backend) {
    case SweepBackend::Exact: {
      auto probs = exact_distribution(config, theta);
      SweepRow row;
      row.theta = theta;
      row.expectation = distribution_expectation(probs);
      result.rows[idx] = row;
      break;
    }
    case SweepBackend::Sampled: {
      auto probs = exact_distribution(config, theta);
      Counts counts =
          sample_from_probabilities(probs, 2, config.shots, job_seed);
      result.rows[idx] = row_from_counts(theta, counts);
      break;
    }
    case SweepBackend::Noisy: {
      TranspileResult lowered =
          transpile(build_toy_circuit(theta, alpha), coupling);
      DensityMatrix rho = simulate_noisy(lowered.circuit, *noise);
      const auto measured = lowered.circuit.measured_qubits();
      auto probs = rho.probabilities(measured);
      std::vector<double> eps;
      for (int q : measured)
        eps.push_back(noise->readout_error(q));
      probs = apply_readout_error(probs, eps);
      Counts counts =
          sample_from_probabilities(probs, 2, config.shots, job_seed);
      result.rows[idx] = row_from_counts(theta, counts);
      break;
    }
    }
  };

  int jobs = config.jobs > 0
                 ? config.jobs
                 : static_cast<int>(std::thread::hardware_concurrency());
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(grid.size())));
  if (jobs == 1) {
    for (std::size_t i = 0; i < grid.size(); ++i)
      run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j)
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t idx = next.fetch_add(1);
          if (idx >= grid.size())
            return;
          try {
            run_one(idx);
          } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure)
              failure = std::current_exception();
            return;
          }
        }
      });
    for (auto &t : pool)
      t.join();
    if (failure)
      std::rethrow_exception(failure);
  }
  return result;
}

FitResult fit_sweep(const SweepResult &result) {
  std::vector<double> thetas, values;
  for (const auto &row : result.rows) {
    thetas.push_back(row.theta);
    values.push_back(row.expectation);
  }
  return fit_curve(thetas, values);
}

SharpeningTable sharpening_curves(const std::vector<int> &n_list,
                                  const std::vector<double> &thetas,
                                  double w2) {
  for (int n : n_list)
    if (n < 1)
      throw Error("copy counts must be at least 1");
  SharpeningTable table;
  table.n_list = n_list;
  table.thetas = thetas;
  for (int n : n_list) {
    std::vector<double> curve;
    curve.reserve(thetas.size());
    for (double theta : thetas)
      curve.push_back(toy_expectation(theta, n, w2));
    table.curves.push_back(std::move(curve));
  }
  return table;
}

double region_width(const std::vector<double> &thetas,
                    const std::vector<double> &curve, double level,
                    double step) {
  double width = 0.0;
  for (std::size_t i = 0; i < curve.size(); ++i)
    if (curve[i] > level)
      width += step;
  (void)thetas;
  return width;
}

} // namespace stc
