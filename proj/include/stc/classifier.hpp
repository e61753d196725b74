// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <optional>
#include <vector>

#include "stc/circuit.hpp"
#include "stc/statevector.hpp"

namespace stc {

/// Labeled training set. Data vectors are amplitude-encoded, so after
/// construction every point has unit norm (within 1e-12), the weights are
/// non-negative and sum to 1, and labels are 0/1.
struct Dataset {
  std::vector<std::vector<cplx>> points;
  std::vector<int> labels;
  std::vector<double> weights;

  Dataset() = default;
  Dataset(std::vector<std::vector<cplx>> points_, std::vector<int> labels_,
          std::vector<double> weights_);

  int size() const { return static_cast<int>(points.size()); }
  int feature_dim() const {
    return points.empty() ? 0 : static_cast<int>(points[0].size());
  }
  /// Qubits per data register: ceil(log2(feature_dim)), at least 1.
  int data_qubits() const;

  /// Uniform weights helper.
  static Dataset uniform(std::vector<std::vector<cplx>> points,
                         std::vector<int> labels);
};

struct TestPoint {
  std::vector<cplx> x;
  explicit TestPoint(std::vector<cplx> x_);
};

enum class ClassifierKind { Hadamard, SwapTest, SwapTestForking };

enum class KernelVariant { Fidelity, RealOverlap };

/// Everything the two-qubit measurement yields: the expectation value of
/// sigma_z(ancilla) sigma_z(label), the assigned label (0/1, -1 for a tie),
/// the ancilla branch probabilities and the conditional label probabilities
/// P(label = b | ancilla = a).
struct ClassifierOutcome {
  double expectation = 0.0;
  int label = -1;
  double p0 = 0.0;
  double p1 = 0.0;
  double conditional[2][2] = {{0.0, 0.0}, {0.0, 0.0}}; // [a][b]
};

/// Normalizes a raw feature vector into amplitudes over ceil(log2 N) qubits,
/// zero-padded beyond N. Throws on the zero vector.
StateVector encode_amplitude(std::span<const cplx> raw);

/// The interference-classifier input state
///   (1/sqrt(2)) sum_m sqrt(w_m) (|0>|x_m> + |1>|x~>) |y_m> |m>
/// over registers a (qubit 0), d, l, m (index register of ceil(log2 M)
/// qubits; absent for M = 1).
StateVector prepare_hadamard_state(const Dataset &dataset,
                                   const TestPoint &test);

/// The swap-test classifier input
///   sum_m sqrt(w_m) |0> |x~>^n |x_m>^n |y_m> |m>
/// over registers a, in (n copies), d (n copies), l, m.
StateVector prepare_swaptest_state(const Dataset &dataset,
                                   const TestPoint &test, int copies,
                                   const SimOptions &options = {});

/// Runs the interference classifier: expectation equals
/// sum_m (-1)^{y_m} w_m Re<x~|x_m> on the exact backend.
ClassifierOutcome run_hadamard(const Dataset &dataset, const TestPoint &test);

/// Runs the swap-test classifier on n entangled copies: expectation equals
/// sum_m (-1)^{y_m} w_m |<x~|x_m>|^{2n}; the ancilla branch probability p0 is
/// always >= 1/2.
ClassifierOutcome run_swaptest(const Dataset &dataset, const TestPoint &test,
                               int copies, const SimOptions &options = {});

/// Builds the product-state construction: separate registers for the test
/// data, working data/label registers, index register, and per-point data and
/// label registers, assembled by index-controlled swaps and finished with the
/// swap-test. Junk registers stay entangled but do not affect the two-qubit
/// measurement. Throws when the qubit budget
/// n(M+2)ceil(lg N) + 2 ceil(lg M) + M + 1 exceeds `max_qubits`.
Circuit build_forking_circuit(const Dataset &dataset, const TestPoint &test,
                              int copies, int max_qubits = 26);

/// Convenience: simulate the forking circuit and return the zz expectation.
double forking_expectation(const Dataset &dataset, const TestPoint &test,
                           int copies, const SimOptions &options = {});

/// Direct classical evaluation of the kernel sum
///   sum_m (-1)^{y_m} w_m |<x~|x_m>|^{2n}        (Fidelity)
///   sum_m (-1)^{y_m} w_m Re<x~|x_m>             (RealOverlap)
/// on the encoded vectors. This is the independent oracle against which the
/// circuit implementations are checked.
double kernel_oracle(const Dataset &dataset, const TestPoint &test, int copies,
                     KernelVariant variant = KernelVariant::Fidelity);

/// Builds the two-hypothesis discrimination operator
///   A = sum_{y_m=0} w_m (|x_m><x_m|)^{(x)n} - sum_{y_m=1} w_m (...)^{(x)n}
/// as a dense matrix and returns tr(A |x~><x~|^{(x)n}). Algebraically equal
/// to the fidelity kernel sum.
double helstrom_expectation(const Dataset &dataset, const TestPoint &test,
                            int copies);

/// Label rule: 0 if the expectation is positive, 1 if negative, -1 (tie)
/// within +-tie_epsilon of zero.
int assign_label(double expectation, double tie_epsilon = 0.0);

// -- the two-point example family ------------------------------------------

/// x_1 = (i|0> + |1>)/sqrt(2) with label 0, x_2 = (i|0> - |1>)/sqrt(2) with
/// label 1, weights (1 - w2, w2).
Dataset toy_dataset(double w2 = 0.5);

/// x~(theta) = cos(theta/2)|0> - i sin(theta/2)|1>.
TestPoint toy_test(double theta);

/// Closed form of the swap-test expectation on the example family,
///   w1 sin^2(theta/2 + pi/4)^n ... generalized to n copies:
///   w1 (sin^2(theta/2 + pi/4))^n - w2 (cos^2(theta/2 + pi/4))^n.
double toy_expectation(double theta, int copies = 1, double w2 = 0.5);

/// The 5-qubit circuit implementing the example classifier with registers
/// (a, m, d, l, in): Ry^dag(alpha) on m; H, Rz^dag(pi), S on d; cz(m, d);
/// cx(m, l); Rx(theta) on in; then the swap-test H(a), cswap(a; d, in), H(a)
/// and measurements of a and l. alpha = 2 asin(sqrt(w2)) sets the weights.
Circuit build_toy_circuit(double theta, double alpha);

} // namespace stc
