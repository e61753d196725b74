// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stc/density_matrix.hpp"
#include "stc/gate.hpp"
#include "stc/statevector.hpp"

namespace stc {

/// Contiguous range of wires belonging to a named register.
struct QubitRange {
  int start = 0;
  int size = 1;
};

/// Gate-level intermediate representation: a fixed number of wires, a table
/// of named registers (a, m, d, l, in, x_k, l_k, ...) and an ordered op list.
/// Circuits are immutable once built apart from append(), so concurrent reads
/// are safe.
class Circuit {
public:
  explicit Circuit(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  const std::vector<GateOp> &ops() const { return ops_; }
  const std::map<std::string, QubitRange> &registers() const {
    return registers_;
  }

  void add_register(const std::string &name, int start, int size);
  const QubitRange &reg(const std::string &name) const;

  /// Validates the op against the wire count and rejects gates on qubits that
  /// already carry a terminal measurement.
  void append(GateOp op);

  /// Measured qubits in append order, with their classical bit indices.
  std::vector<int> measured_qubits() const;
  std::vector<int> measured_clbits() const;

  /// Same circuit with wires renamed through `permutation` (old -> new).
  Circuit permuted(const std::vector<int> &permutation) const;

private:
  int num_qubits_;
  std::map<std::string, QubitRange> registers_;
  std::vector<GateOp> ops_;
  std::vector<bool> measured_;
};

struct SimOptions {
  int statevector_cap = 26; // 2^26 amplitudes ~ 1 GiB
  int density_cap = 12;     // 4^12 entries ~ 256 MiB
};

/// Runs all non-measurement ops and returns the final state. Measurements
/// and barriers are skipped (sampling is a separate step).
StateVector simulate_statevector(const Circuit &circuit,
                                 std::optional<StateVector> initial = {},
                                 const SimOptions &options = {});

DensityMatrix simulate_density(const Circuit &circuit,
                               std::optional<DensityMatrix> initial = {},
                               const SimOptions &options = {});

} // namespace stc
