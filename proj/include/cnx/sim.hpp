// Copyright 2026 The cnxlog Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Dense simulation. Little-endian: qubit q is bit q of the basis index.

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "cnx/circuit.hpp"

namespace cnx {

class SimError : public std::runtime_error {
 public:
  explicit SimError(const std::string& message) : std::runtime_error(message) {}
};

constexpr unsigned kMaxUnitaryQubits = 13;
constexpr unsigned kMaxStateQubits = 22;

template <typename Scalar = double>
using Unitary =
    Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <typename Scalar = double>
using StateVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

namespace detail {

// Rows of `m` indexed by basis states; every column evolves independently.
template <typename Derived>
void apply_controlled(Eigen::MatrixBase<Derived>& m, std::uint64_t ctrl, unsigned t,
                      const Mat2& u) {
  using S = typename Derived::Scalar;
  const std::uint64_t tb = std::uint64_t{1} << t;
  const std::uint64_t dim = m.rows();
  const bool is_x = u(0, 0) == 0. && u(1, 1) == 0. && u(0, 1) == 1. && u(1, 0) == 1.;
  const S a(u(0, 0)), b(u(0, 1)), c(u(1, 0)), d(u(1, 1));
  for (std::uint64_t i = 0; i < dim; ++i) {
    if ((i & tb) || (i & ctrl) != ctrl) continue;
    const auto j = i | tb;
    if (is_x) {
      m.row(i).swap(m.row(j));
      continue;
    }
    if (b == S(0) && c == S(0)) {
      if (a != S(1)) m.row(i) *= a;
      if (d != S(1)) m.row(j) *= d;
      continue;
    }
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      const S x = m(i, k), y = m(j, k);
      m(i, k) = a * x + b * y;
      m(j, k) = c * x + d * y;
    }
  }
}

inline std::uint64_t mask_of(const std::vector<unsigned>& qs, std::size_t count) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < count; ++i) m |= std::uint64_t{1} << qs[i];
  return m;
}

template <typename Derived>
void apply_gate(Eigen::MatrixBase<Derived>& m, const Gate& g) {
  static const Mat2 kX = (Mat2() << 0, 1, 1, 0).finished();
  switch (g.kind) {
    case GateKind::CX:
    case GateKind::CCX:
      apply_controlled(m, mask_of(g.qubits, g.qubits.size() - 1), g.target(), kX);
      return;
    case GateKind::CU2:
      apply_controlled(m, mask_of(g.qubits, 1), g.target(), g.matrix);
      return;
    case GateKind::RCCX: {
      Circuit one(*std::max_element(g.qubits.begin(), g.qubits.end()) + 1);
      one.add(g);
      const Circuit low = lower(one);
      for (const Gate& h : low.gates()) apply_gate(m, h);
      return;
    }
    default:
      apply_controlled(m, 0, g.target(), single_qubit_matrix(g));
  }
}

}  // namespace detail

template <typename Scalar = double>
Unitary<Scalar> unitary_of(const Circuit& c) {
  if (c.n_qubits() > kMaxUnitaryQubits) throw SimError("unitary_of: too many qubits");
  const Eigen::Index dim = Eigen::Index{1} << c.n_qubits();
  Unitary<Scalar> u(dim, dim);
  // columns evolve independently; chunks keep the working set in cache
  const Eigen::Index w = std::min<Eigen::Index>(dim, 32);
  Unitary<Scalar> part(dim, w);
  for (Eigen::Index j0 = 0; j0 < dim; j0 += w) {
    part.setZero();
    for (Eigen::Index k = 0; k < w; ++k) part(j0 + k, k) = 1;
    for (const Gate& g : c.gates()) detail::apply_gate(part, g);
    u.middleCols(j0, w) = part;
  }
  return u;
}

template <typename Scalar>
StateVector<Scalar> apply(const Circuit& c, StateVector<Scalar> state) {
  if (c.n_qubits() > kMaxStateQubits) throw SimError("apply: too many qubits");
  if (state.size() != (Eigen::Index{1} << c.n_qubits()))
    throw SimError("apply: dimension mismatch");
  for (const Gate& g : c.gates()) detail::apply_gate(state, g);
  return state;
}

template <typename Scalar = double>
StateVector<Scalar> basis_state(unsigned n_qubits, std::uint64_t index) {
  StateVector<Scalar> s = StateVector<Scalar>::Zero(Eigen::Index{1} << n_qubits);
  s(index) = 1;
  return s;
}

template <typename Scalar = double>
StateVector<Scalar> random_state(unsigned n_qubits, std::mt19937_64& rng) {
  std::normal_distribution<Scalar> nd;
  StateVector<Scalar> s(Eigen::Index{1} << n_qubits);
  for (auto& x : s) x = {nd(rng), nd(rng)};
  return s.normalized();
}

template <typename Scalar = double>
StateVector<Scalar> random_product_state(unsigned n_qubits, std::mt19937_64& rng) {
  std::normal_distribution<Scalar> nd;
  StateVector<Scalar> s = StateVector<Scalar>::Ones(1);
  for (unsigned q = 0; q < n_qubits; ++q) {
    Eigen::Matrix<std::complex<Scalar>, 2, 1> v(std::complex<Scalar>(nd(rng), nd(rng)),
                                                std::complex<Scalar>(nd(rng), nd(rng)));
    v.normalize();
    StateVector<Scalar> next(s.size() * 2);
    next.head(s.size()) = s * v(0);  // qubit q is the new most significant bit
    next.tail(s.size()) = s * v(1);
    s.swap(next);
  }
  return s;
}

// Permutation flipping qubit n when qubits 0..n-1 are all one.
template <typename Scalar = double>
Unitary<Scalar> cnx_oracle(unsigned n) {
  if (n + 1 > kMaxUnitaryQubits) throw SimError("cnx_oracle: too many qubits");
  const std::uint64_t dim = std::uint64_t{1} << (n + 1), all = (std::uint64_t{1} << n) - 1;
  Unitary<Scalar> u = Unitary<Scalar>::Zero(dim, dim);
  for (std::uint64_t i = 0; i < dim; ++i) {
    const std::uint64_t j = (i & all) == all ? i ^ (std::uint64_t{1} << n) : i;
    u(j, i) = 1;
  }
  return u;
}

// C^n (W_0 ⊗ W_1 ⊗ ...): controls 0..n-1, W_i on qubit n + i.
template <typename Scalar = double>
Unitary<Scalar> controlled_oracle(unsigned n, const std::vector<Mat2>& ws) {
  const auto q = n + static_cast<unsigned>(ws.size());
  if (q > kMaxUnitaryQubits) throw SimError("controlled_oracle: too many qubits");
  const Eigen::Index dim = Eigen::Index{1} << q;
  Unitary<Scalar> u = Unitary<Scalar>::Identity(dim, dim);
  const std::uint64_t ctrl = (std::uint64_t{1} << n) - 1;
  for (unsigned i = 0; i < ws.size(); ++i) detail::apply_controlled(u, ctrl, n + i, ws[i]);
  return u;
}

// u ⊗ I on `extra` more significant qubits.
template <typename Derived>
auto pad_identity(const Eigen::MatrixBase<Derived>& u, unsigned extra) {
  using S = typename Derived::Scalar;
  const Eigen::Index d = u.rows(), k = Eigen::Index{1} << extra;
  Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> out =
      Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>::Zero(d * k, d * k);
  for (Eigen::Index b = 0; b < k; ++b) out.block(b * d, b * d, d, d) = u;
  return out;
}

enum class EquivKind { exact, global_phase, diagonal, clean_subspace, tensor_identity };

struct EquivMode {
  EquivKind kind = EquivKind::exact;
  std::vector<unsigned> ancillas;  // subspace / tensor modes only
};

struct EquivResult {
  double distance = 0.;
  bool pass = false;
};

namespace detail {

template <typename DA, typename DB>
std::complex<double> phase_between(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  // Largest-magnitude entry of B^† A fixes the phase.
  const auto m = (b.adjoint() * a).eval();
  Eigen::Index r, c;
  m.cwiseAbs().maxCoeff(&r, &c);
  const auto z = std::complex<double>(m(r, c));
  return std::abs(z) > 0 ? z / std::abs(z) : std::complex<double>(1);
}

}  // namespace detail

template <typename DA, typename DB>
EquivResult equiv(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b,
                  const EquivMode& mode, double tol = 1e-9) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols())
    throw SimError("equiv: dimension mismatch");
  EquivResult r;
  std::uint64_t anc = 0;
  for (unsigned q : mode.ancillas) anc |= std::uint64_t{1} << q;
  if (anc >= static_cast<std::uint64_t>(a.rows())) throw SimError("equiv: ancilla out of range");
  switch (mode.kind) {
    case EquivKind::exact:
      r.distance = (a - b).cwiseAbs().maxCoeff();
      break;
    case EquivKind::global_phase: {
      const auto ph = detail::phase_between(a, b);
      r.distance = (a - ph * b).cwiseAbs().maxCoeff();
      break;
    }
    case EquivKind::diagonal: {
      const auto m = (b.adjoint() * a).eval();
      double off = 0., mod = 0.;
      for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
          if (i == j)
            mod = std::max(mod, std::abs(std::abs(m(i, j)) - 1.));
          else
            off = std::max(off, std::abs(m(i, j)));
        }
      r.distance = std::max(off, mod);
      break;
    }
    case EquivKind::clean_subspace: {
      // Columns with every ancilla |0>; A must agree with B there, which also
      // forces the image back into the subspace with ancillae at |0>.
      double d = 0.;
      for (Eigen::Index j = 0; j < a.cols(); ++j) {
        if (j & anc) continue;
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
          d = std::max(d, std::abs(a(i, j) - b(i, j)));
          if (i & anc) d = std::max(d, std::abs(a(i, j)));
        }
      }
      r.distance = d;
      break;
    }
    case EquivKind::tensor_identity: {
      // B must itself be of the form B' ⊗ I on the ancillae.
      double d = 0.;
      for (Eigen::Index i = 0; i < b.rows(); ++i)
        for (Eigen::Index j = 0; j < b.cols(); ++j) {
          if ((i & anc) != (j & anc))
            d = std::max(d, std::abs(b(i, j)));
          else
            d = std::max(d, std::abs(b(i, j) - b(i & ~anc, j & ~anc)));
        }
      const auto ph = detail::phase_between(a, b);
      r.distance = std::max(d, (a - ph * b).cwiseAbs().maxCoeff());
      break;
    }
  }
  r.pass = r.distance <= tol;
  return r;
}

// min over phi of max_k |e^{i p_k} - e^{i phi}|: 2 sin(arc / 4) for the
// shortest arc holding every phase.
inline double phase_spread_distance(std::vector<double> phases) {
  if (phases.empty()) return 0.;
  constexpr double two_pi = 2 * 3.14159265358979323846;
  for (double& p : phases) p = std::remainder(p, two_pi);
  std::sort(phases.begin(), phases.end());
  double gap = phases.front() + two_pi - phases.back();
  for (std::size_t i = 1; i < phases.size(); ++i) gap = std::max(gap, phases[i] - phases[i - 1]);
  return 2 * std::sin((two_pi - gap) / 4);
}

// Operator-norm distance minimised over a global phase. B^† A is unitary
// (normal), so the norm is fixed by its eigenphases alone.
template <typename DA, typename DB>
double spectral_distance(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  using M = Eigen::MatrixXcd;
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw SimError("spectral_distance: dimension mismatch");
  const M m = b.template cast<std::complex<double>>().adjoint() * a.template cast<std::complex<double>>();
  const Eigen::VectorXcd ev = Eigen::ComplexEigenSolver<M>(m, false).eigenvalues();
  std::vector<double> ph(ev.size());
  for (Eigen::Index i = 0; i < ev.size(); ++i) ph[i] = std::arg(ev(i));
  return phase_spread_distance(std::move(ph));
}

// m <- oracle(n, ws) m, without forming the oracle.
template <typename Derived>
void apply_controlled_oracle(Eigen::MatrixBase<Derived>& m, unsigned n, const std::vector<Mat2>& ws) {
  const std::uint64_t ctrl = (std::uint64_t{1} << n) - 1;
  for (unsigned i = 0; i < ws.size(); ++i) detail::apply_controlled(m, ctrl, n + i, ws[i]);
}

// m <- oracle(n, ws)^† m, without forming the oracle.
template <typename Derived>
void undo_controlled_oracle(Eigen::MatrixBase<Derived>& m, unsigned n, const std::vector<Mat2>& ws) {
  const std::uint64_t ctrl = (std::uint64_t{1} << n) - 1;
  for (unsigned i = 0; i < ws.size(); ++i)
    detail::apply_controlled(m, ctrl, n + i, Mat2(ws[i].adjoint()));
}

struct BlockDistance {
  double distance = 0.;  // from the 2x2 blocks' eigenphases
  double leakage = 0.;   // Frobenius norm outside the blocks
  double bound() const { return distance + leakage; }
};

// For a unitary m (typically B^† A) expected to act only on qubit t: the
// spectral distance of its block-diagonal part, and the mass outside it.
// The true distance lies within distance ± leakage.
template <typename Derived>
BlockDistance block_spectral_distance(const Eigen::MatrixBase<Derived>& m, unsigned t) {
  const std::uint64_t tb = std::uint64_t{1} << t, dim = m.rows();
  BlockDistance r;
  double off = 0.;
  std::vector<double> ph;
  ph.reserve(dim);
  for (std::uint64_t i = 0; i < dim; ++i) {
    for (std::uint64_t j = 0; j < dim; ++j)
      if ((i & ~tb) != (j & ~tb)) off += std::norm(std::complex<double>(m(i, j)));
    if (i & tb) continue;
    Eigen::Matrix2cd blk;
    blk << m(i, i), m(i, i | tb), m(i | tb, i), m(i | tb, i | tb);
    const Eigen::Vector2cd ev = Eigen::ComplexEigenSolver<Eigen::Matrix2cd>(blk, false).eigenvalues();
    ph.push_back(std::arg(ev(0)));
    ph.push_back(std::arg(ev(1)));
  }
  r.distance = phase_spread_distance(std::move(ph));
  r.leakage = std::sqrt(off);
  return r;
}

}  // namespace cnx
