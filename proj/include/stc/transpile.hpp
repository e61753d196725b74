// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "stc/circuit.hpp"

namespace stc {

/// Directed coupling graph plus a named logical-to-physical layout table.
struct CouplingMap {
  std::set<std::pair<int, int>> edges;
  std::map<std::string, int> layout;

  bool has_edge(int a, int b) const { return edges.count({a, b}) > 0; }
  bool connected(int a, int b) const { return has_edge(a, b) || has_edge(b, a); }
};

/// The hand-picked device layout used for the 5-qubit example circuit:
/// a->q0, d->q1, in->q2, m->q3, l->q4 on the T-shaped coupling graph
/// 0-1, 1-2, 1-3, 3-4 (both directions).
CouplingMap ourense_coupling();

/// Rewrites every gate into the native set {u1, u2, u3, cx}. Composite gates
/// expand through their reference decompositions (cswap -> 2 cx + Toffoli,
/// Toffoli -> 6 cx + single-qubit gates, swap -> 3 cx, cz -> H-conjugated cx);
/// open controls become X-sandwiches. Throws naming any gate it cannot lower.
Circuit unroll(const Circuit &circuit);

/// Replaces each cx on a reversed-only edge with the H-conjugated cx on the
/// allowed direction. A cx on an uncoupled pair is an error (no routing).
Circuit direct_cx(const Circuit &circuit, const CouplingMap &coupling);

/// Merges maximal runs of adjacent single-qubit native gates into one u1, u2
/// or u3 (dropping identities). Idempotent; never increases the gate count.
Circuit fuse_1q(const Circuit &circuit);

/// Exact tally by display name ("u2", "cx", ...).
std::map<std::string, int> count_gates(const Circuit &circuit);

/// Total over the one-qubit native kinds (u1 + u2 + u3).
int count_1q(const Circuit &circuit);

/// A transpiled circuit plus the trailing wire permutation introduced by
/// routing swaps: the content the input circuit leaves on wire q ends up on
/// wire output_permutation[q] of the transpiled circuit. Identity when no
/// routing swap was needed.
struct TranspileResult {
  Circuit circuit;
  std::vector<int> output_permutation;
};

/// Maps the example circuit's named registers onto physical wires through
/// `coupling.layout` and expands its controlled-swap with the
/// coupling-feasible construction. On a path c-x-y (no triangle, as on the
/// device graph) the Toffoli inside the controlled-swap cannot satisfy the
/// control-control coupling, so one routing swap is inserted mid-sequence
/// and the resulting register exchange is reported as output_permutation.
TranspileResult apply_layout(const Circuit &circuit,
                             const CouplingMap &coupling);

/// layout -> unroll -> direct_cx -> fuse_1q.
TranspileResult transpile(const Circuit &circuit, const CouplingMap &coupling);

/// Full unitary of a (small) circuit, built column-by-column. Intended for
/// equivalence checks; throws above 10 qubits.
std::vector<cplx> circuit_unitary(const Circuit &circuit);

/// max-norm distance between two unitaries after aligning global phase.
double phase_insensitive_distance(const std::vector<cplx> &a,
                                  const std::vector<cplx> &b);

} // namespace stc
