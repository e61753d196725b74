// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "stc/classifier.hpp"

#include <algorithm>
#include <cmath>

namespace stc {

namespace {

std::vector<cplx> encode_vector(std::span<const cplx> raw) {
  if (raw.empty())
    throw Error("cannot encode an empty vector");
  double norm_sq = 0.0;
  for (const auto &v : raw)
    norm_sq += std::norm(v);
  if (norm_sq <= 0.0)
    throw Error("cannot amplitude-encode the zero vector");
  const int w = std::max(1, ceil_log2(static_cast<long long>(raw.size())));
  std::vector<cplx> amps(std::size_t{1} << w, cplx(0, 0));
  const double inv = 1.0 / std::sqrt(norm_sq);
  for (std::size_t i = 0; i < raw.size(); ++i)
    amps[i] = raw[i] * inv;
  return amps;
}

/// result[i] = prod_k vec[(i >> w k) & (2^w - 1)], the n-fold tensor power in
/// little-endian copy order.
std::vector<cplx> tensor_power(const std::vector<cplx> &vec, int n, int w) {
  const std::size_t block = vec.size();
  std::vector<cplx> out(std::size_t{1} << (static_cast<std::size_t>(n) * w));
  const std::size_t mask = block - 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    cplx v(1, 0);
    for (int k = 0; k < n; ++k)
      v *= vec[(i >> (static_cast<std::size_t>(k) * w)) & mask];
    out[i] = v;
  }
  return out;
}

cplx inner_product(const std::vector<cplx> &bra, const std::vector<cplx> &ket) {
  cplx acc(0, 0);
  for (std::size_t i = 0; i < bra.size(); ++i)
    acc += std::conj(bra[i]) * ket[i];
  return acc;
}

/// Uniformly controlled Ry tree preparing sum_m sqrt(w_m) |m> on an
/// initially-|0> register of `width` qubits starting at `start`. Splits on the
/// most significant index bit first; for two weights this is the single
/// Ry(2 asin(sqrt(w2))) rotation.
std::vector<GateOp> index_superposition(int start, int width,
                                        const std::vector<double> &weights) {
  std::vector<GateOp> ops;
  if (width == 0)
    return ops;
  std::vector<double> w(std::size_t{1} << width, 0.0);
  std::copy(weights.begin(), weights.end(), w.begin());
  for (int level = width - 1; level >= 0; --level) {
    const int high_bits = width - 1 - level;
    for (std::size_t h = 0; h < (std::size_t{1} << high_bits); ++h) {
      double p0 = 0.0, p1 = 0.0;
      for (std::size_t m = 0; m < w.size(); ++m) {
        if ((m >> (level + 1)) != h)
          continue;
        ((m >> level) & 1 ? p1 : p0) += w[m];
      }
      if (p0 + p1 < 1e-300)
        continue;
      const double beta = 2.0 * std::atan2(std::sqrt(p1), std::sqrt(p0));
      if (beta == 0.0)
        continue;
      GateOp op = gate::ry(start + level, beta);
      for (int b = 0; b < high_bits; ++b)
        op.controls.push_back(
            Control{start + level + 1 + b, ((h >> b) & 1) != 0});
      ops.push_back(std::move(op));
    }
  }
  return ops;
}

ClassifierOutcome outcome_from_state(const StateVector &psi, int ancilla,
                                     int label_qubit) {
  ClassifierOutcome out;
  out.expectation =
      psi.expectation(Observable::zz(ancilla, label_qubit, psi.num_qubits()));
  const int wires[] = {ancilla, label_qubit};
  auto probs = psi.probabilities(wires);
  // outcome index: bit0 = ancilla, bit1 = label
  out.p0 = probs[0] + probs[2];
  out.p1 = probs[1] + probs[3];
  for (int a = 0; a < 2; ++a) {
    const double pa = (a == 0) ? out.p0 : out.p1;
    for (int b = 0; b < 2; ++b)
      out.conditional[a][b] = pa < 1e-15 ? 0.0 : probs[a + 2 * b] / pa;
  }
  out.label = assign_label(out.expectation);
  return out;
}

} // namespace

Dataset::Dataset(std::vector<std::vector<cplx>> points_,
                 std::vector<int> labels_, std::vector<double> weights_)
    : labels(std::move(labels_)), weights(std::move(weights_)) {
  if (points_.empty())
    throw Error("dataset needs at least one training point");
  if (points_.size() != labels.size() || points_.size() != weights.size())
    throw Error("points, labels and weights must have equal length");
  const std::size_t n0 = points_[0].size();
  double wsum = 0.0;
  for (std::size_t m = 0; m < points_.size(); ++m) {
    if (points_[m].size() != n0)
      throw Error("all training points must share one feature dimension");
    if (labels[m] != 0 && labels[m] != 1)
      throw Error("labels must be 0 or 1");
    if (weights[m] < 0.0)
      throw Error("weights must be non-negative");
    wsum += weights[m];
    points.push_back(encode_vector(points_[m]));
  }
  if (std::abs(wsum - 1.0) > 1e-12)
    throw Error("weights must sum to 1");
}

int Dataset::data_qubits() const {
  return std::max(1, ceil_log2(feature_dim()));
}

Dataset Dataset::uniform(std::vector<std::vector<cplx>> points,
                         std::vector<int> labels) {
  std::vector<double> w(points.size(), 1.0 / points.size());
  return Dataset(std::move(points), std::move(labels), std::move(w));
}

TestPoint::TestPoint(std::vector<cplx> x_) : x(encode_vector(x_)) {}

StateVector encode_amplitude(std::span<const cplx> raw) {
  return StateVector::from_amplitudes(encode_vector(raw));
}

StateVector prepare_hadamard_state(const Dataset &dataset,
                                   const TestPoint &test) {
  const int M = dataset.size();
  const int w = dataset.data_qubits();
  if (static_cast<int>(test.x.size()) != (1 << w))
    throw Error("test point dimension does not match the dataset");
  const int r = (M > 1) ? ceil_log2(M) : 0;
  const int width = 1 + w + 1 + r;
  std::vector<cplx> amps(std::size_t{1} << width, cplx(0, 0));
  for (int m = 0; m < M; ++m) {
    const double coeff = std::sqrt(dataset.weights[m] / 2.0);
    const std::size_t tail = (static_cast<std::size_t>(m) << (2 + w)) |
                             (static_cast<std::size_t>(dataset.labels[m])
                              << (1 + w));
    for (std::size_t i = 0; i < test.x.size(); ++i) {
      amps[tail | (i << 1) | 0] += coeff * dataset.points[m][i];
      amps[tail | (i << 1) | 1] += coeff * test.x[i];
    }
  }
  return StateVector::from_amplitudes(std::move(amps));
}

StateVector prepare_swaptest_state(const Dataset &dataset,
                                   const TestPoint &test, int copies,
                                   const SimOptions &options) {
  if (copies < 1)
    throw Error("the number of copies must be at least 1");
  const int M = dataset.size();
  const int w = dataset.data_qubits();
  if (static_cast<int>(test.x.size()) != (1 << w))
    throw Error("test point dimension does not match the dataset");
  const int r = (M > 1) ? ceil_log2(M) : 0;
  const int nw = copies * w;
  const int width = 1 + 2 * nw + 1 + r;
  if (width > options.statevector_cap)
    throw Error("swap-test state needs " + std::to_string(width) +
                " qubits, exceeding the statevector cap of " +
                std::to_string(options.statevector_cap));
  auto test_pow = tensor_power(test.x, copies, w);
  std::vector<cplx> amps(std::size_t{1} << width, cplx(0, 0));
  for (int m = 0; m < M; ++m) {
    const double coeff = std::sqrt(dataset.weights[m]);
    auto train_pow = tensor_power(dataset.points[m], copies, w);
    const std::size_t tail = (static_cast<std::size_t>(m) << (2 + 2 * nw)) |
                             (static_cast<std::size_t>(dataset.labels[m])
                              << (1 + 2 * nw));
    for (std::size_t j = 0; j < train_pow.size(); ++j) {
      if (train_pow[j] == cplx(0, 0))
        continue;
      const std::size_t jpart = tail | (j << (1 + nw));
      for (std::size_t i = 0; i < test_pow.size(); ++i)
        amps[jpart | (i << 1)] = coeff * train_pow[j] * test_pow[i];
    }
  }
  return StateVector::from_amplitudes(std::move(amps));
}

ClassifierOutcome run_hadamard(const Dataset &dataset, const TestPoint &test) {
  StateVector psi = prepare_hadamard_state(dataset, test);
  const int a = 0;
  const int l = 1 + dataset.data_qubits();
  GateOp h = gate::h(a);
  psi.apply_matrix(h.targets, base_matrix(h));
  return outcome_from_state(psi, a, l);
}

ClassifierOutcome run_swaptest(const Dataset &dataset, const TestPoint &test,
                               int copies, const SimOptions &options) {
  StateVector psi = prepare_swaptest_state(dataset, test, copies, options);
  const int w = dataset.data_qubits();
  const int nw = copies * w;
  const int a = 0;
  const int l = 1 + 2 * nw;

  GateOp h = gate::h(a);
  psi.apply_matrix(h.targets, base_matrix(h));
  const Control ctrl[] = {{a, true}};
  for (int b = 0; b < nw; ++b) {
    GateOp sw = gate::swap(1 + b, 1 + nw + b);
    psi.apply_matrix(sw.targets, base_matrix(sw), ctrl);
  }
  psi.apply_matrix(h.targets, base_matrix(h));
  return outcome_from_state(psi, a, l);
}

Circuit build_forking_circuit(const Dataset &dataset, const TestPoint &test,
                              int copies, int max_qubits) {
  if (copies < 1)
    throw Error("the number of copies must be at least 1");
  const int M = dataset.size();
  const int w = dataset.data_qubits();
  if (static_cast<int>(test.x.size()) != (1 << w))
    throw Error("test point dimension does not match the dataset");
  const int r = (M > 1) ? ceil_log2(M) : 0;
  const int anc = std::max(r - 1, 0);
  const int nw = copies * w;
  const int width = 2 + 2 * nw + r + anc + M * (nw + 1);
  if (width > max_qubits)
    throw Error("forking circuit needs " + std::to_string(width) +
                " qubits, exceeding the cap of " + std::to_string(max_qubits));

  Circuit circ(width);
  int at = 0;
  circ.add_register("a", at, 1);
  at += 1;
  circ.add_register("in", at, nw);
  const int in0 = at;
  at += nw;
  circ.add_register("d", at, nw);
  const int d0 = at;
  at += nw;
  circ.add_register("l", at, 1);
  const int l0 = at;
  at += 1;
  circ.add_register("m", at, r);
  const int m0 = at;
  at += r;
  circ.add_register("anc", at, anc);
  at += anc;
  std::vector<int> x0(M), lk0(M);
  for (int k = 0; k < M; ++k) {
    circ.add_register("x_" + std::to_string(k + 1), at, nw);
    x0[k] = at;
    at += nw;
    circ.add_register("l_" + std::to_string(k + 1), at, 1);
    lk0[k] = at;
    at += 1;
  }

  // Load the test point and every training point on its own register; labels
  // are X^{y_k} applied to |0>.
  for (int c = 0; c < copies; ++c) {
    std::vector<int> tgt(w);
    for (int b = 0; b < w; ++b)
      tgt[b] = in0 + c * w + b;
    circ.append(gate::state_prep(tgt, test.x));
  }
  for (int k = 0; k < M; ++k) {
    for (int c = 0; c < copies; ++c) {
      std::vector<int> tgt(w);
      for (int b = 0; b < w; ++b)
        tgt[b] = x0[k] + c * w + b;
      circ.append(gate::state_prep(tgt, dataset.points[k]));
    }
    if (dataset.labels[k] == 1)
      circ.append(gate::x(lk0[k]));
  }

  // Index superposition sum_m sqrt(w_m) |m>.
  for (auto &op : index_superposition(m0, r, dataset.weights))
    circ.append(std::move(op));

  // Quantum forking: swaps into the working d and l registers, controlled on
  // the index register matching each m.
  for (int k = 0; k < M; ++k) {
    std::vector<Control> controls;
    for (int b = 0; b < r; ++b)
      controls.push_back(Control{m0 + b, ((k >> b) & 1) != 0});
    for (int b = 0; b < nw; ++b) {
      GateOp sw = gate::swap(d0 + b, x0[k] + b);
      sw.controls = controls;
      circ.append(std::move(sw));
    }
    GateOp sl = gate::swap(l0, lk0[k]);
    sl.controls = controls;
    circ.append(std::move(sl));
  }

  // Swap-test on the assembled state.
  circ.append(gate::h(0));
  for (int b = 0; b < nw; ++b)
    circ.append(gate::cswap(0, d0 + b, in0 + b));
  circ.append(gate::h(0));
  circ.append(gate::measure(0, 0));
  circ.append(gate::measure(l0, 1));
  return circ;
}

double forking_expectation(const Dataset &dataset, const TestPoint &test,
                           int copies, const SimOptions &options) {
  Circuit circ = build_forking_circuit(dataset, test, copies,
                                       options.statevector_cap);
  StateVector psi = simulate_statevector(circ, {}, options);
  return psi.expectation(
      Observable::zz(0, circ.reg("l").start, circ.num_qubits()));
}

double kernel_oracle(const Dataset &dataset, const TestPoint &test, int copies,
                     KernelVariant variant) {
  if (copies < 1)
    throw Error("the number of copies must be at least 1");
  double acc = 0.0;
  for (int m = 0; m < dataset.size(); ++m) {
    const cplx ip = inner_product(test.x, dataset.points[m]);
    const double sign = dataset.labels[m] == 0 ? 1.0 : -1.0;
    const double term = (variant == KernelVariant::Fidelity)
                            ? std::pow(std::norm(ip), copies)
                            : ip.real();
    acc += sign * dataset.weights[m] * term;
  }
  return acc;
}

double helstrom_expectation(const Dataset &dataset, const TestPoint &test,
                            int copies) {
  if (copies < 1)
    throw Error("the number of copies must be at least 1");
  const int w = dataset.data_qubits();
  if (static_cast<int>(test.x.size()) != (1 << w))
    throw Error("test point dimension does not match the dataset");
  const int bits = copies * w;
  if (bits > 12)
    throw Error("discrimination operator would need dimension 2^" +
                std::to_string(bits));
  const std::size_t dim = std::size_t{1} << bits;

  // A = sum_m (-1)^{y_m} w_m (|x_m><x_m|)^{(x) n}, built densely.
  std::vector<cplx> A(dim * dim, cplx(0, 0));
  for (int m = 0; m < dataset.size(); ++m) {
    const auto v = tensor_power(dataset.points[m], copies, w);
    const double wm =
        (dataset.labels[m] == 0 ? 1.0 : -1.0) * dataset.weights[m];
    for (std::size_t r = 0; r < dim; ++r) {
      if (v[r] == cplx(0, 0))
        continue;
      for (std::size_t c = 0; c < dim; ++c)
        A[r * dim + c] += wm * v[r] * std::conj(v[c]);
    }
  }
  const auto t = tensor_power(test.x, copies, w);
  // tr(A |t><t|) = <t| A |t>
  cplx acc(0, 0);
  for (std::size_t r = 0; r < dim; ++r) {
    cplx row(0, 0);
    for (std::size_t c = 0; c < dim; ++c)
      row += A[r * dim + c] * t[c];
    acc += std::conj(t[r]) * row;
  }
  return acc.real();
}

int assign_label(double expectation, double tie_epsilon) {
  if (expectation > tie_epsilon)
    return 0;
  if (expectation < -tie_epsilon)
    return 1;
  return -1;
}

Dataset toy_dataset(double w2) {
  if (w2 < 0.0 || w2 > 1.0)
    throw Error("w2 must lie in [0, 1]");
  const double rs2 = 1.0 / std::sqrt(2.0);
  std::vector<std::vector<cplx>> pts = {
      {cplx(0, rs2), cplx(rs2, 0)},
      {cplx(0, rs2), cplx(-rs2, 0)},
  };
  return Dataset(std::move(pts), {0, 1}, {1.0 - w2, w2});
}

TestPoint toy_test(double theta) {
  return TestPoint({cplx(std::cos(theta / 2), 0),
                    cplx(0, -std::sin(theta / 2))});
}

double toy_expectation(double theta, int copies, double w2) {
  const double s = std::sin(theta / 2 + kPi / 4);
  const double c = std::cos(theta / 2 + kPi / 4);
  return (1.0 - w2) * std::pow(s * s, copies) - w2 * std::pow(c * c, copies);
}

Circuit build_toy_circuit(double theta, double alpha) {
  Circuit circ(5);
  circ.add_register("a", 0, 1);
  circ.add_register("m", 1, 1);
  circ.add_register("d", 2, 1);
  circ.add_register("l", 3, 1);
  circ.add_register("in", 4, 1);
  circ.append(gate::ry(1, -alpha));
  circ.append(gate::h(2));
  circ.append(gate::rz(2, -kPi));
  circ.append(gate::s(2));
  circ.append(gate::cz(1, 2));
  circ.append(gate::cx(1, 3));
  circ.append(gate::rx(4, theta));
  circ.append(gate::h(0));
  circ.append(gate::cswap(0, 2, 4));
  circ.append(gate::h(0));
  circ.append(gate::measure(0, 0));
  circ.append(gate::measure(3, 1));
  return circ;
}

} // namespace stc
