// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <string>
#include <vector>

#include "stc/common.hpp"

namespace stc {

/// One Pauli-string term: a real coefficient and one Pauli label per qubit.
/// paulis[q] is the operator acting on qubit q ('I', 'X', 'Y' or 'Z'),
/// little-endian like everything else in this library.
struct PauliTerm {
  double coefficient = 1.0;
  std::string paulis;
};

/// Hermitian observable as a sparse sum of Pauli strings. Coefficients are
/// real by construction, which keeps expectation values real.
class Observable {
public:
  Observable() = default;
  explicit Observable(std::vector<PauliTerm> terms);

  const std::vector<PauliTerm> &terms() const { return terms_; }
  int num_qubits() const { return num_qubits_; }

  /// Sum of |coefficient|; expectation values lie in [-bound, +bound].
  double coefficient_bound() const;

  /// sigma_z on `qubit_a` times sigma_z on `qubit_b` over `num_qubits` wires.
  static Observable zz(int qubit_a, int qubit_b, int num_qubits);

  /// Single sigma_z.
  static Observable z(int qubit, int num_qubits);

private:
  std::vector<PauliTerm> terms_;
  int num_qubits_ = 0;
};

} // namespace stc
