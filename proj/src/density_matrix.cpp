// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "stc/density_matrix.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>

namespace stc {

KrausChannel KrausChannel::from_operators(std::vector<std::vector<cplx>> ops,
                                          int arity) {
  if (ops.empty())
    throw Error("Kraus channel needs at least one operator");
  const std::size_t dim = std::size_t{1} << arity;
  for (const auto &k : ops)
    if (k.size() != dim * dim)
      throw Error("Kraus operator dimension mismatch");
  KrausChannel ch;
  ch.operators = std::move(ops);
  ch.arity = arity;
  ch.cptp = true;
  ch.cptp = ch.completeness_defect() < 1e-9;
  return ch;
}

double KrausChannel::completeness_defect() const {
  const std::size_t dim = std::size_t{1} << arity;
  std::vector<cplx> acc(dim * dim, cplx(0, 0));
  for (const auto &k : operators)
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) {
        cplx v(0, 0);
        for (std::size_t m = 0; m < dim; ++m)
          v += std::conj(k[m * dim + r]) * k[m * dim + c];
        acc[r * dim + c] += v;
      }
  double defect = 0.0;
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) {
      const cplx expect = (r == c) ? cplx(1, 0) : cplx(0, 0);
      defect = std::max(defect, std::abs(acc[r * dim + c] - expect));
    }
  return defect;
}

DensityMatrix::DensityMatrix(int num_qubits)
    : num_qubits_(num_qubits), dim_(std::size_t{1} << num_qubits) {
  if (num_qubits < 0 || num_qubits > 15)
    throw Error("unsupported density-matrix qubit count " +
                std::to_string(num_qubits));
  mat_.assign(dim_ * dim_, cplx(0, 0));
  mat_[0] = 1.0;
}

DensityMatrix DensityMatrix::from_statevector(const StateVector &psi) {
  DensityMatrix rho(psi.num_qubits());
  const auto &a = psi.amplitudes();
  for (std::size_t r = 0; r < rho.dim_; ++r)
    for (std::size_t c = 0; c < rho.dim_; ++c)
      rho.mat_[r * rho.dim_ + c] = a[r] * std::conj(a[c]);
  return rho;
}

DensityMatrix DensityMatrix::from_matrix(int num_qubits,
                                         std::vector<cplx> matrix) {
  DensityMatrix rho(num_qubits);
  if (matrix.size() != rho.dim_ * rho.dim_)
    throw Error("density matrix dimension mismatch");
  rho.mat_ = std::move(matrix);
  return rho;
}

double DensityMatrix::trace_real() const {
  double t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i)
    t += mat_[i * dim_ + i].real();
  return t;
}

namespace {

// Applies `matrix` (dim 2^t) to the row index space (axis=0) or, with the
// conjugated matrix, to the column index space (axis=1). Together they give
// rho -> M rho M^dagger.
void apply_one_sided(std::vector<cplx> &mat, std::size_t dim, int axis,
                     std::span<const int> targets,
                     std::span<const cplx> matrix,
                     std::span<const Control> controls) {
  const std::size_t t = targets.size();
  const std::size_t block = std::size_t{1} << t;
  std::size_t target_mask = 0;
  for (int q : targets)
    target_mask |= std::size_t{1} << q;
  std::size_t ctrl_on = 0, ctrl_off = 0;
  for (const auto &c : controls)
    (c.on_one ? ctrl_on : ctrl_off) |= std::size_t{1} << c.qubit;

  std::vector<std::size_t> pattern(block, 0);
  for (std::size_t b = 0; b < block; ++b)
    for (std::size_t j = 0; j < t; ++j)
      if (b & (std::size_t{1} << j))
        pattern[b] |= std::size_t{1} << targets[j];

  std::vector<cplx> in(block), out(block);
  for (std::size_t fixed = 0; fixed < dim; ++fixed) {
    for (std::size_t base = 0; base < dim; ++base) {
      if (base & target_mask)
        continue;
      if ((base & ctrl_on) != ctrl_on || (base & ctrl_off) != 0)
        continue;
      for (std::size_t b = 0; b < block; ++b) {
        const std::size_t idx = base | pattern[b];
        in[b] = (axis == 0) ? mat[idx * dim + fixed] : mat[fixed * dim + idx];
      }
      for (std::size_t r = 0; r < block; ++r) {
        cplx acc(0, 0);
        const cplx *row = matrix.data() + r * block;
        for (std::size_t c = 0; c < block; ++c)
          acc += ((axis == 0) ? row[c] : std::conj(row[c])) * in[c];
        out[r] = acc;
      }
      for (std::size_t b = 0; b < block; ++b) {
        const std::size_t idx = base | pattern[b];
        ((axis == 0) ? mat[idx * dim + fixed] : mat[fixed * dim + idx]) =
            out[b];
      }
    }
  }
}

void check_wires(int num_qubits, std::span<const int> wires) {
  for (std::size_t i = 0; i < wires.size(); ++i) {
    if (wires[i] < 0 || wires[i] >= num_qubits)
      throw Error("qubit " + std::to_string(wires[i]) + " out of range");
    for (std::size_t j = i + 1; j < wires.size(); ++j)
      if (wires[i] == wires[j])
        throw Error("duplicate qubit " + std::to_string(wires[i]));
  }
}

} // namespace

void DensityMatrix::apply_matrix(std::span<const int> targets,
                                 std::span<const cplx> matrix,
                                 std::span<const Control> controls) {
  check_wires(num_qubits_, targets);
  const std::size_t block = std::size_t{1} << targets.size();
  if (matrix.size() != block * block)
    throw Error("gate matrix dimension mismatch");
  apply_one_sided(mat_, dim_, 0, targets, matrix, controls);
  apply_one_sided(mat_, dim_, 1, targets, matrix, controls);
}

void DensityMatrix::apply_channel(const KrausChannel &channel,
                                  std::span<const int> targets) {
  check_wires(num_qubits_, targets);
  if (static_cast<int>(targets.size()) != channel.arity)
    throw Error("channel arity does not match target count");
  std::vector<cplx> result(dim_ * dim_, cplx(0, 0));
  for (const auto &k : channel.operators) {
    std::vector<cplx> term = mat_;
    apply_one_sided(term, dim_, 0, targets, k, {});
    apply_one_sided(term, dim_, 1, targets, k, {});
    for (std::size_t i = 0; i < term.size(); ++i)
      result[i] += term[i];
  }
  mat_ = std::move(result);
}

DensityMatrix DensityMatrix::partial_trace(std::span<const int> keep) const {
  if (keep.empty())
    throw Error("partial trace needs a non-empty keep set");
  check_wires(num_qubits_, keep);
  const int k = static_cast<int>(keep.size());
  std::vector<int> traced;
  for (int q = 0; q < num_qubits_; ++q)
    if (std::find(keep.begin(), keep.end(), q) == keep.end())
      traced.push_back(q);

  DensityMatrix out(k);
  std::fill(out.mat_.begin(), out.mat_.end(), cplx(0, 0));
  const std::size_t kd = out.dim_;
  const std::size_t td = std::size_t{1} << traced.size();

  auto compose = [&](std::size_t kept_bits, std::size_t traced_bits) {
    std::size_t idx = 0;
    for (int b = 0; b < k; ++b)
      if (kept_bits & (std::size_t{1} << b))
        idx |= std::size_t{1} << keep[b];
    for (std::size_t b = 0; b < traced.size(); ++b)
      if (traced_bits & (std::size_t{1} << b))
        idx |= std::size_t{1} << traced[b];
    return idx;
  };

  for (std::size_t r = 0; r < kd; ++r)
    for (std::size_t c = 0; c < kd; ++c) {
      cplx acc(0, 0);
      for (std::size_t tbits = 0; tbits < td; ++tbits)
        acc += mat_[compose(r, tbits) * dim_ + compose(c, tbits)];
      out.mat_[r * kd + c] = acc;
    }
  return out;
}

double DensityMatrix::expectation(const Observable &obs) const {
  if (obs.num_qubits() > num_qubits_)
    throw Error("observable acts on more qubits than the state has");
  cplx total(0, 0);
  static const cplx kIPow[4] = {cplx(1, 0), cplx(0, 1), cplx(-1, 0),
                                cplx(0, -1)};
  for (const auto &term : obs.terms()) {
    std::size_t xmask = 0, ymask = 0, zmask = 0;
    for (std::size_t q = 0; q < term.paulis.size(); ++q) {
      switch (term.paulis[q]) {
      case 'X':
        xmask |= std::size_t{1} << q;
        break;
      case 'Y':
        xmask |= std::size_t{1} << q;
        ymask |= std::size_t{1} << q;
        break;
      case 'Z':
        zmask |= std::size_t{1} << q;
        break;
      default:
        break;
      }
    }
    const cplx ybase = kIPow[std::popcount(ymask) & 3];
    // tr(P rho) = sum_j phase(j) rho[j, j ^ xmask]
    cplx acc(0, 0);
    for (std::size_t j = 0; j < dim_; ++j) {
      const bool neg = std::popcount(j & (ymask | zmask)) & 1;
      const cplx phase = neg ? -ybase : ybase;
      acc += phase * mat_[j * dim_ + (j ^ xmask)];
    }
    total += term.coefficient * acc;
  }
  return total.real();
}

std::vector<double>
DensityMatrix::probabilities(std::span<const int> measured) const {
  check_wires(num_qubits_, measured);
  const std::size_t k = measured.size();
  std::vector<double> probs(std::size_t{1} << k, 0.0);
  for (std::size_t i = 0; i < dim_; ++i) {
    std::size_t out = 0;
    for (std::size_t b = 0; b < k; ++b)
      if (i & (std::size_t{1} << measured[b]))
        out |= std::size_t{1} << b;
    probs[out] += mat_[i * dim_ + i].real();
  }
  return probs;
}

void DensityMatrix::validate() const {
  if (std::abs(trace_real() - 1.0) > 1e-10)
    throw Error("density matrix trace deviates from 1");
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = r; c < dim_; ++c)
      if (std::abs(mat_[r * dim_ + c] - std::conj(mat_[c * dim_ + r])) > 1e-12)
        throw Error("density matrix is not Hermitian");
  if (min_eigenvalue() < -1e-9)
    throw Error("density matrix has a negative eigenvalue");
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::MatrixXcd m(dim_, dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c)
      m(r, c) = mat_[r * dim_ + c];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  return solver.eigenvalues().minCoeff();
}

} // namespace stc
