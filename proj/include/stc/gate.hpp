// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <array>
#include <string>
#include <vector>

#include "stc/common.hpp"
#include "stc/statevector.hpp"

namespace stc {

/// Base gate kinds. Controlled gates (cx, cz, ccx, cswap, ...) are a base
/// kind plus entries in GateOp::controls; polarity of each control is a
/// first-class attribute and is only compiled down to X-sandwiches at
/// transpile time.
enum class GateKind {
  Id,
  H,
  X,
  Y,
  Z,
  S,
  Sdg,
  T,
  Tdg,
  Rx,
  Ry,
  Rz,
  U1,
  U2,
  U3,
  Swap,
  StatePrep,
  Measure,
  Reset,
  Barrier,
};

struct GateOp {
  GateKind kind = GateKind::Id;
  std::vector<double> params;
  std::vector<int> targets;
  std::vector<Control> controls;
  std::vector<cplx> state;  // StatePrep payload
  std::vector<int> clbits;  // Measure destinations, parallel to targets

  /// Number of target wires the base kind acts on (1 for 1q gates, 2 for
  /// Swap, the register width for StatePrep).
  int base_arity() const;

  bool is_unitary() const;

  /// Display name: "h", "cx" (X + one closed control), "ccx", "cz",
  /// "cswap", "u3", ... Open or extra controls get a generic "c.." prefix.
  std::string name() const;

  /// All wires the op touches (targets then control qubits).
  std::vector<int> qubits() const;
};

/// U(theta, phi, lambda) =
///   [[cos(th/2),            -e^{i lambda} sin(th/2)],
///    [e^{i phi} sin(th/2),   e^{i(lambda+phi)} cos(th/2)]]
/// u1 = U(0,0,lambda), u2 = U(pi/2,phi,lambda), u3 = U(theta,phi,lambda).
std::array<cplx, 4> u3_matrix(double theta, double phi, double lambda);

/// Row-major 2^arity x 2^arity matrix of the base gate (controls excluded).
/// Throws for non-unitary kinds.
std::vector<cplx> base_matrix(const GateOp &op);

/// Checks arity, finite angles, distinct targets, control/target disjointness.
void validate_gate(const GateOp &op, int num_qubits);

// -- constructors ----------------------------------------------------------

namespace gate {
GateOp id(int q);
GateOp h(int q);
GateOp x(int q);
GateOp y(int q);
GateOp z(int q);
GateOp s(int q);
GateOp sdg(int q);
GateOp t(int q);
GateOp tdg(int q);
GateOp rx(int q, double theta);
GateOp ry(int q, double theta);
GateOp rz(int q, double theta);
GateOp u1(int q, double lambda);
GateOp u2(int q, double phi, double lambda);
GateOp u3(int q, double theta, double phi, double lambda);
GateOp cx(int control, int target);
GateOp cz(int control, int target);
GateOp ccx(int control_a, int control_b, int target);
GateOp swap(int a, int b);
GateOp cswap(int control, int a, int b);
GateOp state_prep(std::vector<int> targets, std::vector<cplx> amplitudes);
GateOp measure(int q, int clbit);
GateOp barrier();
} // namespace gate

} // namespace stc
