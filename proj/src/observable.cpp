// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "stc/observable.hpp"

#include <cmath>

namespace stc {

Observable::Observable(std::vector<PauliTerm> terms)
    : terms_(std::move(terms)) {
  for (const auto &t : terms_) {
    if (!std::isfinite(t.coefficient))
      throw Error("observable coefficient must be finite");
    for (char p : t.paulis)
      if (p != 'I' && p != 'X' && p != 'Y' && p != 'Z')
        throw Error(std::string("invalid Pauli label '") + p + "'");
    num_qubits_ = std::max(num_qubits_, static_cast<int>(t.paulis.size()));
  }
}

double Observable::coefficient_bound() const {
  double s = 0.0;
  for (const auto &t : terms_)
    s += std::abs(t.coefficient);
  return s;
}

Observable Observable::zz(int qubit_a, int qubit_b, int num_qubits) {
  if (qubit_a == qubit_b)
    throw Error("zz observable needs two distinct qubits");
  std::string label(num_qubits, 'I');
  label[qubit_a] = 'Z';
  label[qubit_b] = 'Z';
  return Observable({PauliTerm{1.0, label}});
}

Observable Observable::z(int qubit, int num_qubits) {
  std::string label(num_qubits, 'I');
  label[qubit] = 'Z';
  return Observable({PauliTerm{1.0, label}});
}

} // namespace stc
