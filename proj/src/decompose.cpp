// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "stc/decompose.hpp"

#include <algorithm>

namespace stc {

namespace {

void require_distinct(std::span<const int> qubits, const char *what) {
  for (std::size_t i = 0; i < qubits.size(); ++i)
    for (std::size_t j = i + 1; j < qubits.size(); ++j)
      if (qubits[i] == qubits[j])
        throw Error(std::string(what) + " needs pairwise distinct qubits");
}

} // namespace

std::vector<GateOp> cswap_decompose(int ctrl, int a, int b) {
  const int qs[] = {ctrl, a, b};
  require_distinct(qs, "controlled-swap decomposition");
  return {gate::cx(b, a), gate::ccx(ctrl, a, b), gate::cx(b, a)};
}

std::vector<GateOp> ccx_decompose(int a, int b, int c) {
  const int qs[] = {a, b, c};
  require_distinct(qs, "Toffoli decomposition");
  return {
      gate::h(c),      gate::cx(b, c), gate::tdg(c), gate::cx(a, c),
      gate::t(c),      gate::cx(b, c), gate::tdg(c), gate::cx(a, c),
      gate::t(b),      gate::t(c),     gate::h(c),   gate::cx(a, b),
      gate::t(a),      gate::tdg(b),   gate::cx(a, b),
  };
}

std::vector<GateOp> multi_controlled_swap(std::span<const Control> controls,
                                          int a, int b,
                                          std::span<const int> ancillas) {
  if (controls.empty())
    throw Error("multi-controlled swap needs at least one control");
  {
    std::vector<int> qs{a, b};
    for (const auto &c : controls)
      qs.push_back(c.qubit);
    for (int anc : ancillas)
      qs.push_back(anc);
    require_distinct(qs, "multi-controlled swap");
  }
  const std::size_t c = controls.size();
  if (ancillas.size() + 1 < c)
    throw Error("multi-controlled swap on " + std::to_string(c) +
                " controls needs " + std::to_string(c - 1) +
                " clean ancillas, got " + std::to_string(ancillas.size()));

  std::vector<GateOp> ops;
  // Open controls become X-sandwiches so the ladder sees closed controls.
  for (const auto &ctl : controls)
    if (!ctl.on_one)
      ops.push_back(gate::x(ctl.qubit));

  if (c == 1) {
    auto core = cswap_decompose(controls[0].qubit, a, b);
    ops.insert(ops.end(), core.begin(), core.end());
  } else {
    // AND-ladder: fold all controls into ancillas[c-2], then one
    // single-controlled swap, then uncompute. 2(c-1) ladder Toffolis plus
    // the Toffoli inside the swap core.
    std::vector<GateOp> ladder;
    ladder.push_back(
        gate::ccx(controls[0].qubit, controls[1].qubit, ancillas[0]));
    for (std::size_t i = 2; i < c; ++i)
      ladder.push_back(
          gate::ccx(ancillas[i - 2], controls[i].qubit, ancillas[i - 1]));
    ops.insert(ops.end(), ladder.begin(), ladder.end());
    auto core = cswap_decompose(ancillas[c - 2], a, b);
    ops.insert(ops.end(), core.begin(), core.end());
    for (auto it = ladder.rbegin(); it != ladder.rend(); ++it)
      ops.push_back(*it);
  }

  for (const auto &ctl : controls)
    if (!ctl.on_one)
      ops.push_back(gate::x(ctl.qubit));
  return ops;
}

} // namespace stc
