// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <span>
#include <vector>

#include "stc/gate.hpp"

namespace stc {

/// Controlled-swap as [cx(b->a), ccx(ctrl, a, b), cx(b->a)]: exactly two
/// CNOTs around one Toffoli. The composite equals the 8x8 CSWAP unitary.
std::vector<GateOp> cswap_decompose(int ctrl, int a, int b);

/// Textbook Toffoli decomposition into 6 cx and 9 single-qubit gates
/// (H/T/Tdg). Equals CCX exactly, including global phase; locked by a
/// unitary-equality test.
std::vector<GateOp> ccx_decompose(int control_a, int control_b, int target);

/// Swap of a and b controlled on an arbitrary set of (possibly open)
/// controls, compiled with a Toffoli ladder over clean ancillas:
/// 2(c-1) ladder Toffolis plus the one inside the single-controlled swap.
/// Ancillas are returned clean. Needs at least (#controls - 1) ancillas.
std::vector<GateOp> multi_controlled_swap(std::span<const Control> controls,
                                          int a, int b,
                                          std::span<const int> ancillas);

} // namespace stc
