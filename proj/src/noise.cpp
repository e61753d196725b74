// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "stc/noise.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>

#include "stc/rng.hpp"

namespace stc {

namespace {

// CODATA values in eV units.
constexpr double kPlanckEvS = 4.135667696e-15;
constexpr double kBoltzmannEvK = 8.617333262e-5;

double decay(double tg_ns, double t_us) {
  if (tg_ns == 0.0)
    return 1.0;
  if (!std::isfinite(t_us))
    return 1.0;
  if (t_us <= 0.0)
    return 0.0;
  return std::exp(-(tg_ns * 1e-3) / t_us);
}

void check_relaxation(double t1_us, double t2_us, double tg_ns) {
  if (tg_ns < 0.0)
    throw Error("gate time must be non-negative");
  if (t2_us > 2.0 * t1_us)
    throw Error("relaxation times must satisfy T2 <= 2 T1");
}

std::vector<cplx> pauli_string_matrix(int arity, std::size_t code) {
  static const cplx kP[4][4] = {
      {1, 0, 0, 1},                         // I
      {0, 1, 1, 0},                         // X
      {0, cplx(0, -1), cplx(0, 1), 0},      // Y
      {1, 0, 0, -1},                        // Z
  };
  const std::size_t dim = std::size_t{1} << arity;
  std::vector<cplx> out(dim * dim, cplx(0, 0));
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) {
      cplx v(1, 0);
      for (int q = 0; q < arity; ++q) {
        const int p = (code >> (2 * q)) & 3;
        const int rb = (r >> q) & 1;
        const int cb = (c >> q) & 1;
        v *= kP[p][rb * 2 + cb];
        if (v == cplx(0, 0))
          break;
      }
      out[r * dim + c] = v;
    }
  return out;
}

} // namespace

void DeviceParams::validate() const {
  if (qubits.empty())
    throw Error("device has no qubits");
  for (const auto &q : qubits) {
    if (q.t1_us < 0.0 || q.t2_us < 0.0)
      throw Error("relaxation times must be non-negative");
    if (q.t2_us > 2.0 * q.t1_us)
      throw Error("device data must satisfy T2 <= 2 T1");
    if (q.gate_time_u2_ns < 0.0)
      throw Error("gate times must be non-negative");
    for (double p : {q.readout_error, q.gate_error})
      if (p < 0.0 || p > 1.0)
        throw Error("error probabilities must lie in [0, 1]");
  }
  for (const auto &p : pairs) {
    if (p.qubit_a < 0 || p.qubit_b < 0 ||
        p.qubit_a >= static_cast<int>(qubits.size()) ||
        p.qubit_b >= static_cast<int>(qubits.size()))
      throw Error("pair calibration references an unknown qubit");
    if (p.gate_error_cx < 0.0 || p.gate_error_cx > 1.0 ||
        p.gate_time_cx_ns < 0.0)
      throw Error("invalid pair calibration");
  }
}

const PairParams &DeviceParams::pair(int a, int b) const {
  for (const auto &p : pairs)
    if ((p.qubit_a == a && p.qubit_b == b) ||
        (p.qubit_a == b && p.qubit_b == a))
      return p;
  throw Error("no cx calibration for qubit pair (" + std::to_string(a) + ", " +
              std::to_string(b) + ")");
}

double excited_population(double freq_ghz, double temperature_k) {
  if (freq_ghz <= 0.0)
    throw Error("qubit frequency must be positive");
  if (temperature_k < 0.0)
    throw Error("temperature must be non-negative");
  if (temperature_k == 0.0)
    return 0.0;
  const double x =
      2.0 * kPlanckEvS * (freq_ghz * 1e9) / (kBoltzmannEvK * temperature_k);
  if (x > 700.0)
    return 0.0;
  return 1.0 / (1.0 + std::exp(x));
}

double depolarizing_param_1q(double eps, double t1_us, double t2_us,
                             double tg_ns) {
  check_relaxation(t1_us, t2_us, tg_ns);
  const double d = decay(tg_ns, t1_us) + 2.0 * decay(tg_ns, t2_us);
  double p = 1.0 + 3.0 * (2.0 * eps - 1.0) / d;
  if (p < 0.0 || p > 1.0) {
    std::cerr << "warning: 1q depolarizing probability " << p
              << " clamped to [0, 1]\n";
    p = std::clamp(p, 0.0, 1.0);
  }
  return p;
}

double depolarizing_param_2q(double eps_cx, double t1a_us, double t2a_us,
                             double t1b_us, double t2b_us, double tg_ns) {
  check_relaxation(t1a_us, t2a_us, tg_ns);
  check_relaxation(t1b_us, t2b_us, tg_ns);
  const double t01 = decay(tg_ns, t1a_us), t02 = decay(tg_ns, t2a_us);
  const double t11 = decay(tg_ns, t1b_us), t12 = decay(tg_ns, t2b_us);
  const double d = t01 + t11 + t01 * t11 + 4.0 * t02 * t12 +
                   2.0 * (t02 + t12) + 2.0 * (t11 * t02 + t01 * t12);
  double p = 1.0 + 5.0 * (4.0 * eps_cx - 3.0) / d;
  if (p < 0.0 || p > 1.0) {
    std::cerr << "warning: 2q depolarizing probability " << p
              << " clamped to [0, 1]\n";
    p = std::clamp(p, 0.0, 1.0);
  }
  return p;
}

KrausChannel depolarizing_channel(double p, int arity) {
  if (p < 0.0 || p > 1.0)
    throw Error("depolarizing probability must lie in [0, 1]");
  if (arity < 1 || arity > 3)
    throw Error("depolarizing channel supports 1 to 3 qubits");
  const std::size_t dim = std::size_t{1} << arity;
  const std::size_t npauli = std::size_t{1} << (2 * arity); // 4^N
  std::vector<std::vector<cplx>> ops;
  if (p == 0.0) {
    ops.push_back(pauli_string_matrix(arity, 0));
    return KrausChannel::from_operators(std::move(ops), arity);
  }
  const double w_id = std::sqrt(1.0 - (npauli - 1) * p / npauli);
  const double w_p = std::sqrt(p / npauli);
  for (std::size_t code = 0; code < npauli; ++code) {
    auto m = pauli_string_matrix(arity, code);
    const double w = (code == 0) ? w_id : w_p;
    for (auto &v : m)
      v *= w;
    ops.push_back(std::move(m));
  }
  (void)dim;
  return KrausChannel::from_operators(std::move(ops), arity);
}

ChoiMatrix thermal_choi(double p_e, double p_reset, double eps_t2) {
  ChoiMatrix choi = ChoiMatrix::Zero();
  choi(0, 0) = 1.0 - p_e * p_reset;
  choi(0, 3) = eps_t2;
  choi(1, 1) = p_e * p_reset;
  choi(2, 2) = (1.0 - p_e) * p_reset;
  choi(3, 0) = eps_t2;
  choi(3, 3) = 1.0 - (1.0 - p_e) * p_reset;
  return choi;
}

KrausChannel choi_to_kraus(const ChoiMatrix &choi) {
  const double herm_defect = (choi - choi.adjoint()).cwiseAbs().maxCoeff();
  auto reshape = [](const Eigen::Vector4cd &v) {
    // column-major: element (i, j) = v[i + 2 j]
    return std::vector<cplx>{v(0), v(2), v(1), v(3)};
  };
  std::vector<std::vector<cplx>> ops;
  if (herm_defect < 1e-12) {
    Eigen::SelfAdjointEigenSolver<ChoiMatrix> solver(choi);
    const auto evals = solver.eigenvalues();
    if (evals.minCoeff() >= -1e-9) {
      for (int i = 0; i < 4; ++i) {
        const double lambda = std::max(0.0, evals(i));
        if (lambda < 1e-14)
          continue;
        Eigen::Vector4cd v = solver.eigenvectors().col(i);
        auto K = reshape(v);
        for (auto &x : K)
          x *= std::sqrt(lambda);
        ops.push_back(std::move(K));
      }
      if (ops.empty())
        ops.push_back({0, 0, 0, 0});
      return KrausChannel::from_operators(std::move(ops), 1);
    }
  }
  // Non-Hermitian or non-positive Choi: SVD yields left/right Kraus families,
  // which form a CPTP map only when they coincide.
  Eigen::JacobiSVD<Eigen::Matrix4cd> svd(
      choi, Eigen::ComputeFullU | Eigen::ComputeFullV);
  std::vector<std::vector<cplx>> left, right;
  bool coincide = true;
  for (int i = 0; i < 4; ++i) {
    const double sigma = svd.singularValues()(i);
    if (sigma < 1e-14)
      continue;
    Eigen::Vector4cd u = svd.matrixU().col(i);
    Eigen::Vector4cd v = svd.matrixV().col(i);
    if ((u - v).cwiseAbs().maxCoeff() > 1e-9)
      coincide = false;
    auto Kl = reshape(u);
    auto Kr = reshape(v);
    for (auto &x : Kl)
      x *= std::sqrt(sigma);
    for (auto &x : Kr)
      x *= std::sqrt(sigma);
    left.push_back(std::move(Kl));
    right.push_back(std::move(Kr));
  }
  KrausChannel ch = KrausChannel::from_operators(std::move(left), 1);
  ch.cptp = ch.cptp && coincide;
  return ch;
}

ChoiMatrix kraus_to_choi(const KrausChannel &channel) {
  if (channel.arity != 1)
    throw Error("kraus_to_choi is defined for single-qubit channels");
  ChoiMatrix choi = ChoiMatrix::Zero();
  for (const auto &k : channel.operators)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int r = 0; r < 2; ++r)
          for (int c = 0; c < 2; ++c)
            // |i><j| (x) K |i><j| K^dag  ->  block (i, j), entry (r, c)
            choi(2 * i + r, 2 * j + c) += k[r * 2 + i] * std::conj(k[c * 2 + j]);
  return choi;
}

KrausChannel thermal_relaxation_channel(double t1_us, double t2_us,
                                        double tg_ns, double p_e) {
  check_relaxation(t1_us, t2_us, tg_ns);
  if (p_e < 0.0 || p_e > 1.0)
    throw Error("excited-state population must lie in [0, 1]");
  const double eps_t1 = decay(tg_ns, t1_us);
  const double eps_t2 = decay(tg_ns, t2_us);
  const double p_reset = 1.0 - eps_t1;

  if (t2_us <= t1_us) {
    // eps_t1 underflows to 0 for very long gates; no coherence survives then.
    const double ratio = eps_t1 > 0.0 ? eps_t2 / eps_t1 : 1.0;
    const double p_z = (1.0 - p_reset) * (1.0 - ratio) / 2.0;
    const double p_r0 = (1.0 - p_e) * p_reset;
    const double p_r1 = p_e * p_reset;
    const double p_id = 1.0 - p_z - p_r0 - p_r1;
    std::vector<std::vector<cplx>> ops;
    auto push = [&](double prob, std::vector<cplx> m) {
      if (prob <= 0.0)
        return;
      const double w = std::sqrt(prob);
      for (auto &v : m)
        v *= w;
      ops.push_back(std::move(m));
    };
    push(p_id, {1, 0, 0, 1});
    push(p_z, {1, 0, 0, -1});
    // reset -> |0>: {|0><0|, |0><1|}, reset -> |1>: {|1><0|, |1><1|}
    push(p_r0, {1, 0, 0, 0});
    push(p_r0, {0, 1, 0, 0});
    push(p_r1, {0, 0, 1, 0});
    push(p_r1, {0, 0, 0, 1});
    return KrausChannel::from_operators(std::move(ops), 1);
  }
  return choi_to_kraus(thermal_choi(p_e, p_reset, eps_t2));
}

std::vector<double> apply_readout_error(std::span<const double> probabilities,
                                        std::span<const double> epsilons) {
  const std::size_t k = epsilons.size();
  if (probabilities.size() != (std::size_t{1} << k))
    throw Error("distribution size does not match the qubit count");
  for (double e : epsilons)
    if (e < 0.0 || e > 0.5)
      throw Error("readout error must lie in [0, 0.5]");
  std::vector<double> out(probabilities.begin(), probabilities.end());
  // One bit at a time: P'(j) mixes outcomes differing in that bit.
  for (std::size_t b = 0; b < k; ++b) {
    const double e = epsilons[b];
    if (e == 0.0)
      continue;
    const std::size_t bit = std::size_t{1} << b;
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (i & bit)
        continue;
      const double p0 = out[i];
      const double p1 = out[i | bit];
      out[i] = (1.0 - e) * p0 + e * p1;
      out[i | bit] = e * p0 + (1.0 - e) * p1;
    }
  }
  return out;
}

Counts apply_readout_error(const Counts &counts,
                           std::span<const double> epsilons,
                           std::uint64_t seed) {
  for (double e : epsilons)
    if (e < 0.0 || e > 0.5)
      throw Error("readout error must lie in [0, 0.5]");
  Rng rng(seed);
  Counts out;
  out.shots = counts.shots;
  for (const auto &[key, n] : counts.values) {
    if (key.size() != epsilons.size())
      throw Error("counts key width does not match the qubit count");
    for (std::uint64_t s = 0; s < n; ++s) {
      std::string flipped = key;
      for (std::size_t b = 0; b < epsilons.size(); ++b)
        if (rng.uniform() < epsilons[b])
          flipped[b] = flipped[b] == '0' ? '1' : '0';
      out.values[flipped] += 1;
    }
  }
  return out;
}

NoiseModel build_noise_model(const DeviceParams &device,
                             const NoiseOptions &options) {
  device.validate();
  NoiseModel model;
  const int nq = static_cast<int>(device.qubits.size());
  model.readout_.resize(nq);

  auto one_qubit_stages = [&](int q, double tg_ns) {
    const auto &cal = device.qubits[q];
    const double pe = excited_population(cal.freq_ghz, cal.temperature_k);
    std::vector<NoiseModel::Stage> stages;
    KrausChannel thermal =
        thermal_relaxation_channel(cal.t1_us, cal.t2_us, tg_ns, pe);
    KrausChannel depol = depolarizing_channel(
        depolarizing_param_1q(cal.gate_error, cal.t1_us, cal.t2_us, tg_ns), 1);
    if (thermal.operators.size() > 1)
      stages.push_back({{q}, std::move(thermal)});
    if (depol.operators.size() > 1)
      stages.push_back({{q}, std::move(depol)});
    if (!options.thermal_first)
      std::reverse(stages.begin(), stages.end());
    return stages;
  };

  for (int q = 0; q < nq; ++q) {
    const auto &cal = device.qubits[q];
    model.readout_[q] = cal.readout_error;
    model.table_["u2:" + std::to_string(q)] =
        one_qubit_stages(q, cal.gate_time_u2_ns);
    model.table_["u3:" + std::to_string(q)] =
        one_qubit_stages(q, cal.gate_time_u2_ns * options.u3_time_factor);
  }

  for (const auto &pair : device.pairs) {
    std::vector<NoiseModel::Stage> stages;
    for (int q : {pair.qubit_a, pair.qubit_b}) {
      const auto &cal = device.qubits[q];
      const double pe = excited_population(cal.freq_ghz, cal.temperature_k);
      KrausChannel thermal = thermal_relaxation_channel(
          cal.t1_us, cal.t2_us, pair.gate_time_cx_ns, pe);
      if (thermal.operators.size() > 1)
        stages.push_back({{q}, std::move(thermal)});
    }
    const auto &ca = device.qubits[pair.qubit_a];
    const auto &cb = device.qubits[pair.qubit_b];
    KrausChannel depol = depolarizing_channel(
        depolarizing_param_2q(pair.gate_error_cx, ca.t1_us, ca.t2_us,
                              cb.t1_us, cb.t2_us, pair.gate_time_cx_ns),
        2);
    if (!options.thermal_first) {
      std::vector<NoiseModel::Stage> reordered;
      reordered.push_back({{pair.qubit_a, pair.qubit_b}, std::move(depol)});
      for (auto &s : stages)
        reordered.push_back(std::move(s));
      stages = std::move(reordered);
    } else {
      stages.push_back({{pair.qubit_a, pair.qubit_b}, std::move(depol)});
    }
    // both directions share the calibration
    const std::string ka = "cx:" + std::to_string(pair.qubit_a) + ":" +
                           std::to_string(pair.qubit_b);
    const std::string kb = "cx:" + std::to_string(pair.qubit_b) + ":" +
                           std::to_string(pair.qubit_a);
    model.table_[ka] = stages;
    model.table_[kb] = std::move(stages);
  }
  return model;
}

std::vector<NoiseModel::Stage> NoiseModel::stages_for(const GateOp &op) const {
  const std::string name = op.name();
  if (name == "u1" || name == "id" || name == "barrier" || name == "measure")
    return {};
  std::string key;
  if (name == "u2" || name == "u3") {
    key = name + ":" + std::to_string(op.targets[0]);
  } else if (name == "cx") {
    key = "cx:" + std::to_string(op.controls[0].qubit) + ":" +
          std::to_string(op.targets[0]);
  } else {
    throw Error("no noise channels defined for gate '" + name +
                "'; transpile to the native set first");
  }
  auto it = table_.find(key);
  if (it == table_.end())
    throw Error("noise model has no entry for " + key);
  return it->second;
}

double NoiseModel::readout_error(int qubit) const {
  if (qubit < 0 || qubit >= static_cast<int>(readout_.size()))
    throw Error("readout error queried for an unknown qubit");
  return readout_[qubit];
}

DensityMatrix simulate_noisy(const Circuit &circuit, const NoiseModel &model,
                             const SimOptions &options) {
  if (circuit.num_qubits() > options.density_cap)
    throw Error("density-matrix backend capped at " +
                std::to_string(options.density_cap) + " qubits; circuit needs " +
                std::to_string(circuit.num_qubits()));
  DensityMatrix rho(circuit.num_qubits());
  for (const auto &op : circuit.ops()) {
    if (op.kind == GateKind::Measure || op.kind == GateKind::Barrier ||
        op.kind == GateKind::Id)
      continue;
    rho.apply_matrix(op.targets, base_matrix(op), op.controls);
    for (const auto &stage : model.stages_for(op))
      rho.apply_channel(stage.channel, stage.targets);
  }
  return rho;
}

} // namespace stc
