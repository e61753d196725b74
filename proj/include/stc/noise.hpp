// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "stc/circuit.hpp"
#include "stc/counts.hpp"
#include "stc/density_matrix.hpp"

namespace stc {

/// Per-qubit calibration row. Times follow the calibration-table units:
/// relaxation in microseconds, gate times in nanoseconds, frequency in GHz.
struct QubitParams {
  double t1_us = 0.0;
  double t2_us = 0.0;
  double freq_ghz = 0.0;
  double readout_error = 0.0;
  double gate_error = 0.0;
  double gate_time_u2_ns = 0.0;
  double temperature_k = 0.0;
};

struct PairParams {
  int qubit_a = 0;
  int qubit_b = 0;
  double gate_error_cx = 0.0;
  double gate_time_cx_ns = 0.0;
};

struct DeviceParams {
  std::vector<QubitParams> qubits;
  std::vector<PairParams> pairs;

  /// Enforces T2 <= 2 T1, non-negative times, probabilities in [0,1].
  void validate() const;
  const PairParams &pair(int a, int b) const;
};

/// Single-qubit Choi matrix, basis ordering |i><j| (x) E(|i><j|).
using ChoiMatrix = Eigen::Matrix4cd;

/// Excited-state population p_e = 1 / (1 + exp(2 h f / (k_B T))) with h in
/// eV s and k_B in eV/K. T = 0 (or very large f) gives 0.
double excited_population(double freq_ghz, double temperature_k);

/// Depolarizing probability for a 1-qubit gate of duration tg_ns such that
/// depolarizing composed with thermal relaxation reproduces the reported
/// average gate infidelity eps:
///   p = 1 + 3 (2 eps - 1) / d,  d = e^{-Tg/T1} + 2 e^{-Tg/T2}.
/// Tg = 0 (or infinite T1, T2) reduces to p = 2 eps. Results outside [0, 1]
/// are clamped with a warning on stderr.
double depolarizing_param_1q(double eps, double t1_us, double t2_us,
                             double tg_ns);

/// Two-qubit analogue: p2 = 1 + 5 (4 eps - 3) / d with
///   d = t01 + t11 + t01 t11 + 4 t02 t12 + 2 (t02 + t12)
///       + 2 (t11 t02 + t01 t12),   tik = e^{-Tg/Tik}.
/// Tg = 0 reduces to p2 = 4 eps / 3.
double depolarizing_param_2q(double eps_cx, double t1a_us, double t2a_us,
                             double t1b_us, double t2b_us, double tg_ns);

/// Uniform depolarizing channel on `arity` qubits:
///   { sqrt(1 - (4^N - 1) p / 4^N) I, sqrt(p / 4^N) P_j } over all
/// non-identity Pauli strings P_j. p = 0 collapses to a single identity
/// operator. Throws when p is outside [0, 1].
KrausChannel depolarizing_channel(double p, int arity);

/// Thermal relaxation over a gate of duration tg_ns. For T2 <= T1 this is the
/// probabilistic mixture of {I, Z, reset->|0>, reset->|1>} with
///   p_z  = (1 - p_reset)(1 - e_T2/e_T1)/2,
///   p_r0 = (1 - p_e) p_reset,  p_r1 = p_e p_reset,  p_id = remainder,
/// where e_Tk = exp(-Tg/Tk) and p_reset = 1 - e_T1. For T2 > T1 the channel
/// is built from its Choi matrix via choi_to_kraus. Requires T2 <= 2 T1.
KrausChannel thermal_relaxation_channel(double t1_us, double t2_us,
                                        double tg_ns, double p_e);

/// The T2 > T1 regime's Choi matrix, exposed for tests.
ChoiMatrix thermal_choi(double p_e, double p_reset, double eps_t2);

/// Kraus operators from a Choi matrix. Hermitian Choi with eigenvalues
/// >= -1e-9: K_l = sqrt(lambda_l) reshape(v_l) with column-major reshape.
/// Otherwise an SVD gives left/right Kraus families; cptp is set only when
/// they coincide.
KrausChannel choi_to_kraus(const ChoiMatrix &choi);

/// Choi matrix of a single-qubit channel (for round-trip checks).
ChoiMatrix kraus_to_choi(const KrausChannel &channel);

/// Symmetric per-qubit readout confusion applied to an exact outcome
/// distribution; bit i of the outcome index belongs to epsilons[i].
std::vector<double> apply_readout_error(std::span<const double> probabilities,
                                        std::span<const double> epsilons);

/// Same confusion applied shot-by-shot to sampled counts (seeded).
Counts apply_readout_error(const Counts &counts,
                           std::span<const double> epsilons,
                           std::uint64_t seed);

struct NoiseOptions {
  /// Apply thermal relaxation before the depolarizing channel. The reverse
  /// order is allowed; acceptance tolerances absorb the difference.
  bool thermal_first = true;
  /// u3 is modeled as two u2 pulses; u1 is a zero-duration phase shift and
  /// carries no noise.
  double u3_time_factor = 2.0;
};

/// Per-gate channel assignments plus readout confusion probabilities,
/// assembled from a device calibration table. Immutable once built.
class NoiseModel {
public:
  /// Channels to apply after a native gate (u2, u3, cx). u1, id, barrier and
  /// measure return an empty list. Throws for cx on an uncalibrated pair and
  /// for non-native unitaries.
  struct Stage {
    std::vector<int> targets;
    KrausChannel channel;
  };
  std::vector<Stage> stages_for(const GateOp &op) const;

  double readout_error(int qubit) const;
  int num_qubits() const { return static_cast<int>(readout_.size()); }

  friend NoiseModel build_noise_model(const DeviceParams &device,
                                      const NoiseOptions &options);

private:
  std::map<std::string, std::vector<Stage>> table_;
  std::vector<double> readout_;
};

NoiseModel build_noise_model(const DeviceParams &device,
                             const NoiseOptions &options = {});

/// Density-matrix evolution of a native-gate circuit under the noise model:
/// every unitary is applied ideally and followed by its channels. Readout
/// error is not applied here (it acts on measurement statistics).
DensityMatrix simulate_noisy(const Circuit &circuit, const NoiseModel &model,
                             const SimOptions &options = {});

} // namespace stc
