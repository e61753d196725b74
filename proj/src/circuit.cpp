// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "stc/circuit.hpp"

#include <cassert>
#include <cmath>

namespace stc {

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits <= 0)
    throw Error("circuit needs at least one qubit");
  measured_.assign(num_qubits, false);
}

void Circuit::add_register(const std::string &name, int start, int size) {
  if (start < 0 || size < 0 || start + size > num_qubits_)
    throw Error("register '" + name + "' does not fit the circuit");
  if (registers_.count(name))
    throw Error("register '" + name + "' already defined");
  registers_[name] = QubitRange{start, size};
}

const QubitRange &Circuit::reg(const std::string &name) const {
  auto it = registers_.find(name);
  if (it == registers_.end())
    throw Error("unknown register '" + name + "'");
  return it->second;
}

void Circuit::append(GateOp op) {
  validate_gate(op, num_qubits_);
  // Measurements are terminal per qubit.
  for (int q : op.qubits())
    if (measured_[q])
      throw Error("qubit " + std::to_string(q) +
                  " already carries a terminal measurement");
  if (op.kind == GateKind::Measure)
    for (int q : op.targets)
      measured_[q] = true;
  ops_.push_back(std::move(op));
}

std::vector<int> Circuit::measured_qubits() const {
  std::vector<int> out;
  for (const auto &op : ops_)
    if (op.kind == GateKind::Measure)
      for (int q : op.targets)
        out.push_back(q);
  return out;
}

std::vector<int> Circuit::measured_clbits() const {
  std::vector<int> out;
  for (const auto &op : ops_)
    if (op.kind == GateKind::Measure)
      for (int c : op.clbits)
        out.push_back(c);
  return out;
}

Circuit Circuit::permuted(const std::vector<int> &permutation) const {
  if (static_cast<int>(permutation.size()) != num_qubits_)
    throw Error("permutation size mismatch");
  Circuit out(num_qubits_);
  for (const auto &[name, range] : registers_) {
    // Register ranges survive only if contiguous after the permutation;
    // otherwise each wire keeps its identity but the table entry is dropped.
    bool contiguous = true;
    for (int i = 1; i < range.size; ++i)
      if (permutation[range.start + i] != permutation[range.start] + i)
        contiguous = false;
    if (contiguous && range.size > 0)
      out.add_register(name, permutation[range.start], range.size);
  }
  for (GateOp op : ops_) {
    for (auto &t : op.targets)
      t = permutation[t];
    for (auto &c : op.controls)
      c.qubit = permutation[c.qubit];
    out.append(std::move(op));
  }
  return out;
}

namespace {

void check_width(int width, int cap, const char *backend) {
  if (width > cap)
    throw Error(std::string(backend) + " backend capped at " +
                std::to_string(cap) + " qubits; circuit needs " +
                std::to_string(width));
}

} // namespace

StateVector simulate_statevector(const Circuit &circuit,
                                 std::optional<StateVector> initial,
                                 const SimOptions &options) {
  check_width(circuit.num_qubits(), options.statevector_cap, "statevector");
  StateVector psi = initial ? std::move(*initial)
                            : StateVector(circuit.num_qubits());
  if (psi.num_qubits() != circuit.num_qubits())
    throw Error("initial state width does not match the circuit");
  for (const auto &op : circuit.ops()) {
    switch (op.kind) {
    case GateKind::Measure:
    case GateKind::Barrier:
    case GateKind::Id:
      break;
    case GateKind::Reset:
      throw Error("reset is not supported on the statevector backend");
    case GateKind::StatePrep:
      psi.inject_state(op.targets, op.state);
      break;
    default: {
      psi.apply_matrix(op.targets, base_matrix(op), op.controls);
#ifndef NDEBUG
      assert(std::abs(psi.norm_sq() - 1.0) < 1e-12 &&
             "unitary application must preserve the norm");
#endif
      break;
    }
    }
  }
  return psi;
}

DensityMatrix simulate_density(const Circuit &circuit,
                               std::optional<DensityMatrix> initial,
                               const SimOptions &options) {
  check_width(circuit.num_qubits(), options.density_cap, "density-matrix");
  DensityMatrix rho = initial ? std::move(*initial)
                              : DensityMatrix(circuit.num_qubits());
  if (rho.num_qubits() != circuit.num_qubits())
    throw Error("initial state width does not match the circuit");
  for (const auto &op : circuit.ops()) {
    switch (op.kind) {
    case GateKind::Measure:
    case GateKind::Barrier:
    case GateKind::Id:
      break;
    case GateKind::Reset: {
      // Projective reset to |0>, expressed as the Kraus pair {|0><0|,|0><1|}.
      KrausChannel reset = KrausChannel::from_operators(
          {{1, 0, 0, 0}, {0, 1, 0, 0}}, 1);
      rho.apply_channel(reset, op.targets);
      break;
    }
    case GateKind::StatePrep:
      throw Error("state loads are unsupported on the density-matrix backend");
    default:
      rho.apply_matrix(op.targets, base_matrix(op), op.controls);
      break;
    }
  }
  return rho;
}

} // namespace stc
