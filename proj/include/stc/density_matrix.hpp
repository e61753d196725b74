// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <span>
#include <vector>

#include "stc/common.hpp"
#include "stc/observable.hpp"
#include "stc/statevector.hpp"

namespace stc {

/// A Kraus channel: rho -> sum_i K_i rho K_i^dagger. Operators are square
/// row-major matrices of dimension 2^arity. cptp is set when
/// sum_i K_i^dagger K_i = I holds within 1e-9.
struct KrausChannel {
  std::vector<std::vector<cplx>> operators;
  int arity = 1;
  bool cptp = true;

  static KrausChannel from_operators(std::vector<std::vector<cplx>> ops,
                                     int arity);
  /// max-norm of sum K^dag K - I.
  double completeness_defect() const;
};

/// Dense density matrix over `num_qubits` qubits, row-major storage,
/// little-endian qubit ordering (same convention as StateVector).
class DensityMatrix {
public:
  /// |0..0><0..0|
  explicit DensityMatrix(int num_qubits);

  static DensityMatrix from_statevector(const StateVector &psi);
  static DensityMatrix from_matrix(int num_qubits, std::vector<cplx> matrix);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return dim_; }
  const std::vector<cplx> &matrix() const { return mat_; }
  cplx &at(std::size_t r, std::size_t c) { return mat_[r * dim_ + c]; }
  const cplx &at(std::size_t r, std::size_t c) const {
    return mat_[r * dim_ + c];
  }

  double trace_real() const;

  /// rho -> U rho U^dagger with U acting on `targets`, restricted to the
  /// control-satisfied subspace.
  void apply_matrix(std::span<const int> targets, std::span<const cplx> matrix,
                    std::span<const Control> controls = {});

  /// rho -> sum_i K_i rho K_i^dagger on `targets`. Trace is preserved within
  /// 1e-10 for CPTP channels.
  void apply_channel(const KrausChannel &channel, std::span<const int> targets);

  /// Reduced density matrix over the kept qubits (listed qubits become the
  /// new wires 0..k-1 in order). Throws on an empty keep set.
  DensityMatrix partial_trace(std::span<const int> keep) const;

  double expectation(const Observable &obs) const;

  /// Diagonal marginal over the listed qubits; bit i of the outcome index
  /// corresponds to measured[i].
  std::vector<double> probabilities(std::span<const int> measured) const;

  /// Checks trace = 1 (1e-10), Hermiticity (1e-12) and eigenvalues >= -1e-9.
  /// Throws Error describing the first violated invariant.
  void validate() const;

  /// Smallest eigenvalue (Hermitian part).
  double min_eigenvalue() const;

private:
  int num_qubits_;
  std::size_t dim_;
  std::vector<cplx> mat_;
};

} // namespace stc
