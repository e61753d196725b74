// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "stc/common.hpp"
#include "stc/observable.hpp"

namespace stc {

/// A qubit that must be in a given basis state for a controlled operation to
/// fire. on_one=true is a regular (closed) control, on_one=false an open one.
struct Control {
  int qubit;
  bool on_one = true;
};

/// Dense complex state vector over `num_qubits` qubits.
///
/// Qubit ordering is little-endian: qubit 0 is the least significant bit of
/// the basis-state index. Gate application is done with in-place strided
/// amplitude updates; no full 2^n x 2^n matrix is ever materialized.
class StateVector {
public:
  /// |0...0> on `num_qubits` qubits.
  explicit StateVector(int num_qubits);

  /// Adopts the given amplitudes. The length must be a power of two and the
  /// norm must be 1 within 1e-12.
  static StateVector from_amplitudes(std::vector<cplx> amplitudes);

  int num_qubits() const { return num_qubits_; }
  std::size_t size() const { return amps_.size(); }
  const std::vector<cplx> &amplitudes() const { return amps_; }
  cplx &operator[](std::size_t i) { return amps_[i]; }
  const cplx &operator[](std::size_t i) const { return amps_[i]; }

  double norm_sq() const;

  /// Applies a 2^t x 2^t unitary (row-major) to the `targets` subsystem,
  /// restricted to the subspace where all `controls` are satisfied.
  /// Targets must be in-range and pairwise distinct, and controls must not
  /// overlap targets.
  void apply_matrix(std::span<const int> targets, std::span<const cplx> matrix,
                    std::span<const Control> controls = {});

  /// Injects a normalized state on `targets`, which must currently hold
  /// |0...0> (amplitude support check within 1e-9). Used for register loads
  /// of data vectors in circuit form.
  void inject_state(std::span<const int> targets,
                    std::span<const cplx> amplitudes);

  /// <psi| O |psi> (real part; the imaginary part of a Hermitian observable's
  /// expectation is numerical noise).
  double expectation(const Observable &obs) const;

  /// Marginal probabilities of the listed qubits in the computational basis.
  /// Bit i of the outcome index corresponds to measured[i].
  std::vector<double> probabilities(std::span<const int> measured) const;

private:
  int num_qubits_;
  std::vector<cplx> amps_;
};

} // namespace stc
