// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "stc/transpile.hpp"

#include <algorithm>
#include <cmath>

#include "stc/decompose.hpp"

namespace stc {

namespace {

double wrap_angle(double a) {
  a = std::fmod(a, 2.0 * kPi);
  if (a > kPi)
    a -= 2.0 * kPi;
  if (a <= -kPi)
    a += 2.0 * kPi;
  return a;
}

// Extracts (theta, phi, lambda) with U = e^{i gamma} u3(theta, phi, lambda).
struct Zyz {
  double theta, phi, lambda;
};

Zyz zyz_angles(const std::array<cplx, 4> &u) {
  const double a00 = std::abs(u[0]);
  const double a10 = std::abs(u[2]);
  const double theta = 2.0 * std::atan2(a10, a00);
  double phi = 0.0, lambda = 0.0;
  if (a00 < 1e-12) {
    // theta = pi: only phi + lambda matters; put it all into lambda.
    lambda = std::arg(-u[1]) - std::arg(u[2]);
  } else if (a10 < 1e-12) {
    // theta = 0: diagonal; put the relative phase into lambda.
    lambda = std::arg(u[3]) - std::arg(u[0]);
  } else {
    const double g = std::arg(u[0]);
    phi = std::arg(u[2]) - g;
    lambda = std::arg(-u[1]) - g;
  }
  return {theta, wrap_angle(phi), wrap_angle(lambda)};
}

std::array<cplx, 4> mul2(const std::array<cplx, 4> &a,
                         const std::array<cplx, 4> &b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

/// u1/u2/u3 op for the matrix, or nothing when it is the identity up to phase.
std::vector<GateOp> native_1q(int qubit, const std::array<cplx, 4> &u) {
  const Zyz z = zyz_angles(u);
  const double eps = 1e-12;
  if (std::abs(z.theta) < eps) {
    if (std::abs(wrap_angle(z.phi + z.lambda)) < eps)
      return {};
    return {gate::u1(qubit, wrap_angle(z.phi + z.lambda))};
  }
  if (std::abs(z.theta - kPi / 2) < eps)
    return {gate::u2(qubit, z.phi, z.lambda)};
  return {gate::u3(qubit, z.theta, z.phi, z.lambda)};
}

bool is_native_1q(const GateOp &op) {
  return op.controls.empty() &&
         (op.kind == GateKind::U1 || op.kind == GateKind::U2 ||
          op.kind == GateKind::U3);
}

bool is_cx(const GateOp &op) {
  return op.kind == GateKind::X && op.controls.size() == 1 &&
         op.controls[0].on_one;
}

std::array<cplx, 4> as_mat2(const std::vector<cplx> &m) {
  return {m[0], m[1], m[2], m[3]};
}

void unroll_into(const GateOp &op, std::vector<GateOp> &out);

void unroll_list(const std::vector<GateOp> &ops, std::vector<GateOp> &out) {
  for (const auto &op : ops)
    unroll_into(op, out);
}

void unroll_into(const GateOp &op, std::vector<GateOp> &out) {
  // Open controls: X-conjugate to closed controls, then lower the rest.
  if (std::any_of(op.controls.begin(), op.controls.end(),
                  [](const Control &c) { return !c.on_one; })) {
    std::vector<GateOp> pre, post;
    GateOp closed = op;
    for (auto &c : closed.controls)
      if (!c.on_one) {
        pre.push_back(gate::x(c.qubit));
        post.push_back(gate::x(c.qubit));
        c.on_one = true;
      }
    unroll_list(pre, out);
    unroll_into(closed, out);
    unroll_list(post, out);
    return;
  }

  const std::size_t nc = op.controls.size();
  if (nc == 0) {
    switch (op.kind) {
    case GateKind::Measure:
    case GateKind::Barrier:
      out.push_back(op);
      return;
    case GateKind::Id:
      return; // no-op placeholder
    case GateKind::U1:
    case GateKind::U2:
    case GateKind::U3:
      out.push_back(op);
      return;
    case GateKind::H:
      out.push_back(gate::u2(op.targets[0], 0.0, kPi));
      return;
    case GateKind::X:
      out.push_back(gate::u3(op.targets[0], kPi, 0.0, kPi));
      return;
    case GateKind::Y:
      out.push_back(gate::u3(op.targets[0], kPi, kPi / 2, kPi / 2));
      return;
    case GateKind::Z:
      out.push_back(gate::u1(op.targets[0], kPi));
      return;
    case GateKind::S:
      out.push_back(gate::u1(op.targets[0], kPi / 2));
      return;
    case GateKind::Sdg:
      out.push_back(gate::u1(op.targets[0], -kPi / 2));
      return;
    case GateKind::T:
      out.push_back(gate::u1(op.targets[0], kPi / 4));
      return;
    case GateKind::Tdg:
      out.push_back(gate::u1(op.targets[0], -kPi / 4));
      return;
    case GateKind::Rx:
      out.push_back(gate::u3(op.targets[0], op.params[0], -kPi / 2, kPi / 2));
      return;
    case GateKind::Ry:
      out.push_back(gate::u3(op.targets[0], op.params[0], 0.0, 0.0));
      return;
    case GateKind::Rz:
      // equal to u1 up to global phase
      out.push_back(gate::u1(op.targets[0], op.params[0]));
      return;
    case GateKind::Swap: {
      const int a = op.targets[0], b = op.targets[1];
      out.push_back(gate::cx(a, b));
      out.push_back(gate::cx(b, a));
      out.push_back(gate::cx(a, b));
      return;
    }
    default:
      throw Error("cannot lower gate '" + op.name() + "' to the native set");
    }
  }

  if (nc == 1 && op.kind == GateKind::X) {
    out.push_back(op); // already native
    return;
  }
  if (nc == 1 && op.kind == GateKind::Z) {
    const int t = op.targets[0];
    unroll_into(gate::h(t), out);
    out.push_back(gate::cx(op.controls[0].qubit, t));
    unroll_into(gate::h(t), out);
    return;
  }
  if (nc == 2 && op.kind == GateKind::X) {
    unroll_list(ccx_decompose(op.controls[0].qubit, op.controls[1].qubit,
                              op.targets[0]),
                out);
    return;
  }
  if (nc == 1 && op.kind == GateKind::Swap) {
    unroll_list(cswap_decompose(op.controls[0].qubit, op.targets[0],
                                op.targets[1]),
                out);
    return;
  }
  throw Error("cannot lower gate '" + op.name() + "' to the native set");
}

Circuit same_shape(const Circuit &circuit) {
  Circuit out(circuit.num_qubits());
  for (const auto &[name, range] : circuit.registers())
    out.add_register(name, range.start, range.size);
  return out;
}

} // namespace

CouplingMap ourense_coupling() {
  CouplingMap map;
  for (auto [a, b] : {std::pair{0, 1}, {1, 2}, {1, 3}, {3, 4}}) {
    map.edges.insert({a, b});
    map.edges.insert({b, a});
  }
  map.layout = {{"a", 0}, {"d", 1}, {"in", 2}, {"m", 3}, {"l", 4}};
  return map;
}

Circuit unroll(const Circuit &circuit) {
  Circuit out = same_shape(circuit);
  std::vector<GateOp> lowered;
  for (const auto &op : circuit.ops())
    unroll_into(op, lowered);
  for (auto &op : lowered)
    out.append(std::move(op));
  return out;
}

Circuit direct_cx(const Circuit &circuit, const CouplingMap &coupling) {
  Circuit out = same_shape(circuit);
  for (const auto &op : circuit.ops()) {
    if (!is_cx(op)) {
      out.append(op);
      continue;
    }
    const int c = op.controls[0].qubit;
    const int t = op.targets[0];
    if (coupling.has_edge(c, t)) {
      out.append(op);
    } else if (coupling.has_edge(t, c)) {
      out.append(gate::u2(c, 0.0, kPi));
      out.append(gate::u2(t, 0.0, kPi));
      out.append(gate::cx(t, c));
      out.append(gate::u2(c, 0.0, kPi));
      out.append(gate::u2(t, 0.0, kPi));
    } else {
      throw Error("cx on uncoupled pair (" + std::to_string(c) + ", " +
                  std::to_string(t) + "); routing is out of scope");
    }
  }
  return out;
}

Circuit fuse_1q(const Circuit &circuit) {
  Circuit out = same_shape(circuit);
  const int n = circuit.num_qubits();
  // pending accumulated 1q matrix per wire
  std::vector<bool> active(n, false);
  std::vector<std::array<cplx, 4>> pending(
      n, std::array<cplx, 4>{1, 0, 0, 1});

  auto flush = [&](int q) {
    if (!active[q])
      return;
    for (auto &g : native_1q(q, pending[q]))
      out.append(std::move(g));
    pending[q] = {1, 0, 0, 1};
    active[q] = false;
  };

  for (const auto &op : circuit.ops()) {
    if (is_native_1q(op)) {
      const int q = op.targets[0];
      auto m = as_mat2(base_matrix(op));
      pending[q] = mul2(m, pending[q]);
      active[q] = true;
      continue;
    }
    for (int q : op.qubits())
      flush(q);
    if (op.kind == GateKind::Barrier)
      for (int q = 0; q < n; ++q)
        flush(q);
    out.append(op);
  }
  for (int q = 0; q < n; ++q)
    flush(q);
  return out;
}

std::map<std::string, int> count_gates(const Circuit &circuit) {
  std::map<std::string, int> counts;
  for (const auto &op : circuit.ops())
    counts[op.name()] += 1;
  return counts;
}

int count_1q(const Circuit &circuit) {
  auto counts = count_gates(circuit);
  int total = 0;
  for (const char *k : {"u1", "u2", "u3"}) {
    auto it = counts.find(k);
    if (it != counts.end())
      total += it->second;
  }
  return total;
}

namespace {

bool is_cswap(const GateOp &op) {
  return op.kind == GateKind::Swap && op.controls.size() == 1 &&
         op.controls[0].on_one;
}

/// Controlled-swap on a path c - x - y (c coupled to x, x to y, but c not to
/// y). The Toffoli's two control-control CNOTs are the only gates that would
/// need the missing edge; they occur after the target wire has gone idle, so
/// a single routing swap moves that control next to its partner and the
/// sequence finishes on the swapped wires. Net effect: cswap(c; x, y)
/// followed by swap(x, y), which the caller records as a trailing
/// permutation. Costs 11 cx: 2 (outer cx) + 6 (Toffoli) + 3 (routing swap).
std::vector<GateOp> routed_cswap_path(int c, int x, int y) {
  std::vector<GateOp> ops;
  ops.push_back(gate::cx(x, y));
  // Toffoli(c, y -> x), first half (target wire x finishes here)
  ops.push_back(gate::h(x));
  ops.push_back(gate::cx(y, x));
  ops.push_back(gate::tdg(x));
  ops.push_back(gate::cx(c, x));
  ops.push_back(gate::t(x));
  ops.push_back(gate::cx(y, x));
  ops.push_back(gate::tdg(x));
  ops.push_back(gate::cx(c, x));
  ops.push_back(gate::t(y));
  ops.push_back(gate::t(x));
  ops.push_back(gate::h(x));
  // routing swap: bring the y-control next to c
  ops.push_back(gate::cx(x, y));
  ops.push_back(gate::cx(y, x));
  ops.push_back(gate::cx(x, y));
  // Toffoli tail, with the former y wire now living on x
  ops.push_back(gate::cx(c, x));
  ops.push_back(gate::t(c));
  ops.push_back(gate::tdg(x));
  ops.push_back(gate::cx(c, x));
  // closing cx of the controlled-swap, on the swapped wires
  ops.push_back(gate::cx(y, x));
  return ops;
}

} // namespace

TranspileResult apply_layout(const Circuit &circuit,
                             const CouplingMap &coupling) {
  // logical wire -> physical wire via the named single-qubit registers
  std::vector<int> perm(circuit.num_qubits(), -1);
  for (const auto &[name, range] : circuit.registers()) {
    auto it = coupling.layout.find(name);
    if (it == coupling.layout.end())
      throw Error("layout has no entry for register '" + name + "'");
    for (int i = 0; i < range.size; ++i)
      perm[range.start + i] = it->second + i;
  }
  for (int q = 0; q < circuit.num_qubits(); ++q)
    if (perm[q] < 0)
      throw Error("wire " + std::to_string(q) + " belongs to no register");
  {
    std::vector<int> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (int q = 0; q < circuit.num_qubits(); ++q)
      if (sorted[q] != q)
        throw Error("layout is not a permutation of the wires");
  }
  Circuit placed = circuit.permuted(perm);

  Circuit out(placed.num_qubits());
  for (const auto &[name, range] : placed.registers())
    out.add_register(name, range.start, range.size);

  // Wires can be exchanged by routing swaps as ops are emitted; `where[q]`
  // says on which physical wire the content originally at q currently sits.
  std::vector<int> where(placed.num_qubits());
  for (std::size_t q = 0; q < where.size(); ++q)
    where[q] = static_cast<int>(q);

  for (GateOp op : placed.ops()) {
    for (auto &t : op.targets)
      t = where[t];
    for (auto &ctl : op.controls)
      ctl.qubit = where[ctl.qubit];
    if (!is_cswap(op)) {
      out.append(std::move(op));
      continue;
    }
    const int c = op.controls[0].qubit;
    const int x = op.targets[0];
    const int y = op.targets[1];
    const bool cx_ok = coupling.connected(c, x);
    const bool cy_ok = coupling.connected(c, y);
    const bool xy_ok = coupling.connected(x, y);
    if (cx_ok && cy_ok && xy_ok) {
      for (auto &g : cswap_decompose(c, x, y))
        out.append(std::move(g));
    } else if (xy_ok && (cx_ok || cy_ok)) {
      const int near = cx_ok ? x : y;
      const int far = cx_ok ? y : x;
      for (auto &g : routed_cswap_path(c, near, far))
        out.append(std::move(g));
      for (auto &w : where)
        if (w == near)
          w = far;
        else if (w == far)
          w = near;
    } else {
      throw Error("controlled-swap on (" + std::to_string(c) + ", " +
                  std::to_string(x) + ", " + std::to_string(y) +
                  ") does not fit the coupling map");
    }
  }
  TranspileResult result{std::move(out), {}};
  result.output_permutation = where;
  return result;
}

TranspileResult transpile(const Circuit &circuit, const CouplingMap &coupling) {
  TranspileResult placed = apply_layout(circuit, coupling);
  Circuit lowered = fuse_1q(direct_cx(unroll(placed.circuit), coupling));
  return TranspileResult{std::move(lowered),
                         std::move(placed.output_permutation)};
}

std::vector<cplx> circuit_unitary(const Circuit &circuit) {
  const int n = circuit.num_qubits();
  if (n > 10)
    throw Error("circuit_unitary supports at most 10 qubits");
  const std::size_t dim = std::size_t{1} << n;
  std::vector<cplx> u(dim * dim, cplx(0, 0));
  for (std::size_t col = 0; col < dim; ++col) {
    std::vector<cplx> basis(dim, cplx(0, 0));
    basis[col] = 1.0;
    StateVector psi = StateVector::from_amplitudes(std::move(basis));
    for (const auto &op : circuit.ops()) {
      if (!op.is_unitary()) {
        if (op.kind == GateKind::Measure || op.kind == GateKind::Barrier)
          continue;
        throw Error("circuit_unitary on a non-unitary op '" + op.name() + "'");
      }
      if (op.kind == GateKind::Id)
        continue;
      psi.apply_matrix(op.targets, base_matrix(op), op.controls);
    }
    for (std::size_t row = 0; row < dim; ++row)
      u[row * dim + col] = psi[row];
  }
  return u;
}

double phase_insensitive_distance(const std::vector<cplx> &a,
                                  const std::vector<cplx> &b) {
  if (a.size() != b.size())
    throw Error("unitary dimension mismatch");
  cplx overlap(0, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    overlap += std::conj(b[i]) * a[i];
  const double mag = std::abs(overlap);
  const cplx phase = mag < 1e-14 ? cplx(1, 0) : overlap / mag;
  double dist = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    dist = std::max(dist, std::abs(a[i] - phase * b[i]));
  return dist;
}

} // namespace stc
