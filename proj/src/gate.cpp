// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "stc/gate.hpp"

#include <algorithm>
#include <cmath>

namespace stc {

namespace {

constexpr cplx kI(0.0, 1.0);

std::vector<cplx> mat2(cplx a, cplx b, cplx c, cplx d) { return {a, b, c, d}; }

int param_count(GateKind kind) {
  switch (kind) {
  case GateKind::Rx:
  case GateKind::Ry:
  case GateKind::Rz:
  case GateKind::U1:
    return 1;
  case GateKind::U2:
    return 2;
  case GateKind::U3:
    return 3;
  default:
    return 0;
  }
}

} // namespace

int GateOp::base_arity() const {
  switch (kind) {
  case GateKind::Swap:
    return 2;
  case GateKind::StatePrep:
  case GateKind::Barrier:
    return static_cast<int>(targets.size());
  default:
    return 1;
  }
}

bool GateOp::is_unitary() const {
  switch (kind) {
  case GateKind::StatePrep:
  case GateKind::Measure:
  case GateKind::Reset:
  case GateKind::Barrier:
    return false;
  default:
    return true;
  }
}

std::string GateOp::name() const {
  std::string base;
  switch (kind) {
  case GateKind::Id: base = "id"; break;
  case GateKind::H: base = "h"; break;
  case GateKind::X: base = "x"; break;
  case GateKind::Y: base = "y"; break;
  case GateKind::Z: base = "z"; break;
  case GateKind::S: base = "s"; break;
  case GateKind::Sdg: base = "sdg"; break;
  case GateKind::T: base = "t"; break;
  case GateKind::Tdg: base = "tdg"; break;
  case GateKind::Rx: base = "rx"; break;
  case GateKind::Ry: base = "ry"; break;
  case GateKind::Rz: base = "rz"; break;
  case GateKind::U1: base = "u1"; break;
  case GateKind::U2: base = "u2"; break;
  case GateKind::U3: base = "u3"; break;
  case GateKind::Swap: base = "swap"; break;
  case GateKind::StatePrep: base = "state_prep"; break;
  case GateKind::Measure: base = "measure"; break;
  case GateKind::Reset: base = "reset"; break;
  case GateKind::Barrier: base = "barrier"; break;
  }
  if (controls.empty())
    return base;
  const bool all_closed =
      std::all_of(controls.begin(), controls.end(),
                  [](const Control &c) { return c.on_one; });
  if (all_closed && kind == GateKind::X && controls.size() == 1)
    return "cx";
  if (all_closed && kind == GateKind::X && controls.size() == 2)
    return "ccx";
  if (all_closed && kind == GateKind::Z && controls.size() == 1)
    return "cz";
  if (all_closed && kind == GateKind::Swap && controls.size() == 1)
    return "cswap";
  std::string prefix(controls.size(), 'c');
  return prefix + "-" + base;
}

std::vector<int> GateOp::qubits() const {
  std::vector<int> out = targets;
  for (const auto &c : controls)
    out.push_back(c.qubit);
  return out;
}

std::array<cplx, 4> u3_matrix(double theta, double phi, double lambda) {
  if (!std::isfinite(theta) || !std::isfinite(phi) || !std::isfinite(lambda))
    throw Error("u3 angles must be finite");
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  return {cplx(c, 0.0), -std::exp(kI * lambda) * s, std::exp(kI * phi) * s,
          std::exp(kI * (lambda + phi)) * c};
}

std::vector<cplx> base_matrix(const GateOp &op) {
  const double rs2 = 1.0 / std::sqrt(2.0);
  switch (op.kind) {
  case GateKind::Id:
    return mat2(1, 0, 0, 1);
  case GateKind::H:
    return mat2(rs2, rs2, rs2, -rs2);
  case GateKind::X:
    return mat2(0, 1, 1, 0);
  case GateKind::Y:
    return mat2(0, -kI, kI, 0);
  case GateKind::Z:
    return mat2(1, 0, 0, -1);
  case GateKind::S:
    return mat2(1, 0, 0, kI);
  case GateKind::Sdg:
    return mat2(1, 0, 0, -kI);
  case GateKind::T:
    return mat2(1, 0, 0, std::exp(kI * (kPi / 4)));
  case GateKind::Tdg:
    return mat2(1, 0, 0, std::exp(-kI * (kPi / 4)));
  case GateKind::Rx: {
    const double c = std::cos(op.params[0] / 2), s = std::sin(op.params[0] / 2);
    return mat2(c, -kI * s, -kI * s, c);
  }
  case GateKind::Ry: {
    const double c = std::cos(op.params[0] / 2), s = std::sin(op.params[0] / 2);
    return mat2(c, -s, s, c);
  }
  case GateKind::Rz:
    return mat2(std::exp(-kI * (op.params[0] / 2)), 0, 0,
                std::exp(kI * (op.params[0] / 2)));
  case GateKind::U1:
    return mat2(1, 0, 0, std::exp(kI * op.params[0]));
  case GateKind::U2: {
    auto m = u3_matrix(kPi / 2, op.params[0], op.params[1]);
    return {m[0], m[1], m[2], m[3]};
  }
  case GateKind::U3: {
    auto m = u3_matrix(op.params[0], op.params[1], op.params[2]);
    return {m[0], m[1], m[2], m[3]};
  }
  case GateKind::Swap:
    return {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1};
  default:
    throw Error("gate '" + op.name() + "' has no unitary matrix");
  }
}

void validate_gate(const GateOp &op, int num_qubits) {
  if (op.kind == GateKind::Barrier)
    return;
  const int arity = op.base_arity();
  if (op.kind != GateKind::StatePrep &&
      static_cast<int>(op.targets.size()) != arity)
    throw Error("gate '" + op.name() + "' expects " + std::to_string(arity) +
                " target(s)");
  if (op.kind == GateKind::StatePrep) {
    if (op.targets.empty())
      throw Error("state load needs at least one target");
    if (op.state.size() != (std::size_t{1} << op.targets.size()))
      throw Error("state payload dimension mismatch");
  }
  if (static_cast<int>(op.params.size()) != param_count(op.kind))
    throw Error("gate '" + op.name() + "' has wrong parameter count");
  for (double p : op.params)
    if (!std::isfinite(p))
      throw Error("gate '" + op.name() + "' has a non-finite angle");
  if (op.kind == GateKind::Measure &&
      op.clbits.size() != op.targets.size())
    throw Error("measure needs one classical bit per qubit");

  auto wires = op.qubits();
  for (std::size_t i = 0; i < wires.size(); ++i) {
    if (wires[i] < 0 || wires[i] >= num_qubits)
      throw Error("gate '" + op.name() + "' touches qubit " +
                  std::to_string(wires[i]) + " outside the circuit");
    for (std::size_t j = i + 1; j < wires.size(); ++j)
      if (wires[i] == wires[j])
        throw Error("gate '" + op.name() + "' uses qubit " +
                    std::to_string(wires[i]) + " twice");
  }
}

namespace gate {

namespace {
GateOp one(GateKind k, int q, std::vector<double> params = {}) {
  GateOp op;
  op.kind = k;
  op.targets = {q};
  op.params = std::move(params);
  return op;
}
} // namespace

GateOp id(int q) { return one(GateKind::Id, q); }
GateOp h(int q) { return one(GateKind::H, q); }
GateOp x(int q) { return one(GateKind::X, q); }
GateOp y(int q) { return one(GateKind::Y, q); }
GateOp z(int q) { return one(GateKind::Z, q); }
GateOp s(int q) { return one(GateKind::S, q); }
GateOp sdg(int q) { return one(GateKind::Sdg, q); }
GateOp t(int q) { return one(GateKind::T, q); }
GateOp tdg(int q) { return one(GateKind::Tdg, q); }
GateOp rx(int q, double theta) { return one(GateKind::Rx, q, {theta}); }
GateOp ry(int q, double theta) { return one(GateKind::Ry, q, {theta}); }
GateOp rz(int q, double theta) { return one(GateKind::Rz, q, {theta}); }
GateOp u1(int q, double lambda) { return one(GateKind::U1, q, {lambda}); }
GateOp u2(int q, double phi, double lambda) {
  return one(GateKind::U2, q, {phi, lambda});
}
GateOp u3(int q, double theta, double phi, double lambda) {
  return one(GateKind::U3, q, {theta, phi, lambda});
}

GateOp cx(int control, int target) {
  GateOp op = x(target);
  op.controls = {{control, true}};
  return op;
}

GateOp cz(int control, int target) {
  GateOp op = z(target);
  op.controls = {{control, true}};
  return op;
}

GateOp ccx(int control_a, int control_b, int target) {
  GateOp op = x(target);
  op.controls = {{control_a, true}, {control_b, true}};
  return op;
}

GateOp swap(int a, int b) {
  GateOp op;
  op.kind = GateKind::Swap;
  op.targets = {a, b};
  return op;
}

GateOp cswap(int control, int a, int b) {
  GateOp op = swap(a, b);
  op.controls = {{control, true}};
  return op;
}

GateOp state_prep(std::vector<int> targets, std::vector<cplx> amplitudes) {
  GateOp op;
  op.kind = GateKind::StatePrep;
  op.targets = std::move(targets);
  op.state = std::move(amplitudes);
  return op;
}

GateOp measure(int q, int clbit) {
  GateOp op;
  op.kind = GateKind::Measure;
  op.targets = {q};
  op.clbits = {clbit};
  return op;
}

GateOp barrier() {
  GateOp op;
  op.kind = GateKind::Barrier;
  return op;
}

} // namespace gate

} // namespace stc
