// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "stc/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace stc {

namespace {

void check_targets(int num_qubits, std::span<const int> targets,
                   std::span<const Control> controls) {
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i] < 0 || targets[i] >= num_qubits)
      throw Error("target qubit " + std::to_string(targets[i]) +
                  " out of range for " + std::to_string(num_qubits) +
                  " qubits");
    for (std::size_t j = i + 1; j < targets.size(); ++j)
      if (targets[i] == targets[j])
        throw Error("duplicate target qubit " + std::to_string(targets[i]));
  }
  for (const auto &c : controls) {
    if (c.qubit < 0 || c.qubit >= num_qubits)
      throw Error("control qubit " + std::to_string(c.qubit) +
                  " out of range");
    if (std::find(targets.begin(), targets.end(), c.qubit) != targets.end())
      throw Error("control qubit " + std::to_string(c.qubit) +
                  " overlaps a target");
  }
}

} // namespace

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 0 || num_qubits > 30)
    throw Error("unsupported qubit count " + std::to_string(num_qubits));
  amps_.assign(std::size_t{1} << num_qubits, cplx(0.0, 0.0));
  amps_[0] = 1.0;
}

StateVector StateVector::from_amplitudes(std::vector<cplx> amplitudes) {
  std::size_t len = amplitudes.size();
  if (len == 0 || (len & (len - 1)) != 0)
    throw Error("amplitude array length must be a power of two");
  int k = 0;
  while ((std::size_t{1} << k) < len)
    ++k;
  StateVector psi(k);
  psi.amps_ = std::move(amplitudes);
  if (std::abs(psi.norm_sq() - 1.0) > 1e-12)
    throw Error("state vector is not normalized");
  return psi;
}

double StateVector::norm_sq() const {
  // Kahan summation: a plain sequential sum over ~2^20 amplitudes drifts by
  // more than the 1e-12 normalization invariant allows.
  double s = 0.0, comp = 0.0;
  for (const auto &a : amps_) {
    const double y = std::norm(a) - comp;
    const double t = s + y;
    comp = (t - s) - y;
    s = t;
  }
  return s;
}

void StateVector::apply_matrix(std::span<const int> targets,
                               std::span<const cplx> matrix,
                               std::span<const Control> controls) {
  check_targets(num_qubits_, targets, controls);
  const std::size_t t = targets.size();
  const std::size_t dim = std::size_t{1} << t;
  if (matrix.size() != dim * dim)
    throw Error("gate matrix dimension mismatch");

  std::size_t target_mask = 0;
  for (int q : targets)
    target_mask |= std::size_t{1} << q;
  std::size_t ctrl_on = 0, ctrl_off = 0;
  for (const auto &c : controls)
    (c.on_one ? ctrl_on : ctrl_off) |= std::size_t{1} << c.qubit;

  // Bit pattern of each sub-basis index over the target wires.
  std::vector<std::size_t> pattern(dim, 0);
  for (std::size_t b = 0; b < dim; ++b)
    for (std::size_t j = 0; j < t; ++j)
      if (b & (std::size_t{1} << j))
        pattern[b] |= std::size_t{1} << targets[j];

  std::vector<cplx> in(dim), out(dim);
  const std::size_t n = amps_.size();
  for (std::size_t base = 0; base < n; ++base) {
    if (base & target_mask)
      continue;
    if ((base & ctrl_on) != ctrl_on || (base & ctrl_off) != 0)
      continue;
    for (std::size_t b = 0; b < dim; ++b)
      in[b] = amps_[base | pattern[b]];
    for (std::size_t r = 0; r < dim; ++r) {
      cplx acc(0.0, 0.0);
      const cplx *row = matrix.data() + r * dim;
      for (std::size_t c = 0; c < dim; ++c)
        acc += row[c] * in[c];
      out[r] = acc;
    }
    for (std::size_t b = 0; b < dim; ++b)
      amps_[base | pattern[b]] = out[b];
  }
}

void StateVector::inject_state(std::span<const int> targets,
                               std::span<const cplx> amplitudes) {
  check_targets(num_qubits_, targets, {});
  const std::size_t t = targets.size();
  const std::size_t dim = std::size_t{1} << t;
  if (amplitudes.size() != dim)
    throw Error("state payload dimension mismatch");

  std::size_t target_mask = 0;
  for (int q : targets)
    target_mask |= std::size_t{1} << q;
  std::vector<std::size_t> pattern(dim, 0);
  for (std::size_t b = 0; b < dim; ++b)
    for (std::size_t j = 0; j < t; ++j)
      if (b & (std::size_t{1} << j))
        pattern[b] |= std::size_t{1} << targets[j];

  // The target register must currently be |0...0>.
  double leak = 0.0;
  for (std::size_t i = 0; i < amps_.size(); ++i)
    if (i & target_mask)
      leak += std::norm(amps_[i]);
  if (leak > 1e-18)
    throw Error("state load on a register that is not |0...0>");

  for (std::size_t base = 0; base < amps_.size(); ++base) {
    if (base & target_mask)
      continue;
    const cplx a0 = amps_[base];
    if (a0 == cplx(0.0, 0.0))
      continue;
    for (std::size_t b = 1; b < dim; ++b)
      amps_[base | pattern[b]] = amplitudes[b] * a0;
    amps_[base] = amplitudes[0] * a0;
  }
}

double StateVector::expectation(const Observable &obs) const {
  if (obs.num_qubits() > num_qubits_)
    throw Error("observable acts on more qubits than the state has");
  cplx total(0.0, 0.0);
  for (const auto &term : obs.terms()) {
    std::size_t xmask = 0;
    std::size_t ymask = 0;
    std::size_t zmask = 0;
    for (std::size_t q = 0; q < term.paulis.size(); ++q) {
      switch (term.paulis[q]) {
      case 'I':
        break;
      case 'X':
        xmask |= std::size_t{1} << q;
        break;
      case 'Y':
        xmask |= std::size_t{1} << q;
        ymask |= std::size_t{1} << q;
        break;
      case 'Z':
        zmask |= std::size_t{1} << q;
        break;
      default:
        throw Error("invalid Pauli label");
      }
    }
    // P|i> = i^{#Y} (-1)^{popcount(i & (ymask|zmask))} |i ^ xmask>
    static const cplx kIPow[4] = {cplx(1, 0), cplx(0, 1), cplx(-1, 0),
                                  cplx(0, -1)};
    const cplx ybase = kIPow[std::popcount(ymask) & 3];
    cplx acc(0.0, 0.0);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
      if (amps_[i] == cplx(0.0, 0.0))
        continue;
      const bool neg = std::popcount(i & (ymask | zmask)) & 1;
      const cplx phase = neg ? -ybase : ybase;
      acc += std::conj(amps_[i ^ xmask]) * phase * amps_[i];
    }
    total += term.coefficient * acc;
  }
  return total.real();
}

std::vector<double>
StateVector::probabilities(std::span<const int> measured) const {
  check_targets(num_qubits_, measured, {});
  const std::size_t k = measured.size();
  std::vector<double> probs(std::size_t{1} << k, 0.0);
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    const double p = std::norm(amps_[i]);
    if (p == 0.0)
      continue;
    std::size_t out = 0;
    for (std::size_t b = 0; b < k; ++b)
      if (i & (std::size_t{1} << measured[b]))
        out |= std::size_t{1} << b;
    probs[out] += p;
  }
  return probs;
}

} // namespace stc
