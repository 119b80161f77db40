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

#include "cnx/approx.hpp"

#include <fmt/core.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

#include "cnx/euler.hpp"
#include "cnx/su2.hpp"

namespace cnx {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_unitary(const Mat2& u) {
  return (u.adjoint() * u - Mat2::Identity()).cwiseAbs().maxCoeff() < 1e-10;
}

Mat2 phase_gate(double beta) {
  Mat2 m;
  m << 1, 0, 0, std::polar(1., beta);
  return m;
}

// Fourier basis without the final swaps: r[j] ends up holding
// e^{2 pi i v / 2^{j+1}} for v = sum r[i] 2^i.
Circuit qft(unsigned width, const std::vector<unsigned>& r) {
  Circuit c(width);
  for (std::size_t j = r.size(); j-- > 0;) {
    c.add(GateKind::H, {r[j]});
    for (std::size_t i = j; i-- > 0;)
      c.add(make_cu2(phase_gate(2 * kPi / std::ldexp(1., static_cast<int>(j - i + 1))), r[i], r[j]));
  }
  return c;
}

// v += sign * AND(controls), mod 2^|r|
void append_shift(Circuit& c, const std::vector<unsigned>& controls, const std::vector<unsigned>& r,
                  int sign) {
  const Circuit f = qft(c.n_qubits(), r);
  c.append(f);
  std::vector<Mat2> rot;
  for (std::size_t j = 0; j < r.size(); ++j)
    rot.push_back(rz(sign * 2 * kPi / std::ldexp(1., static_cast<int>(j + 1))));
  append_mcmt_su2(c, controls, r, rot);
  c.append(inverse(f));
}

}  // namespace

Su2Angle su2_angle(const Mat2& u) {
  if (!is_unitary(u)) throw ApproxError("su2_angle: matrix is not unitary");
  double alpha = std::arg(u.determinant()) / 2;
  std::complex<double> half_tr = std::polar(1., -alpha) * u.trace() / 2.;
  if (std::abs(half_tr + 1.) < 1e-12) {  // V = -I folds into the phase
    alpha += kPi;
    half_tr = -half_tr;
  }
  return {2 * std::acos(std::clamp(half_tr.real(), -1., 1.)), alpha};
}

unsigned nb_from_epsilon(double theta, double epsilon) {
  if (!(epsilon > 0 && epsilon < 2)) throw ApproxError("nb_from_epsilon: epsilon must lie in (0, 2)");
  if (std::abs(theta) < 1e-15)
    throw ApproxError("nb_from_epsilon: theta = 0, the gate is a pure phase; use exact synthesis");
  const double l = std::log2(std::abs(theta) / std::acos(1 - epsilon * epsilon / 2));
  return static_cast<unsigned>(std::max(1., std::ceil(l)));
}

Mat2 root_gate(const Mat2& u, unsigned j) {
  if (j == 0) return u;
  Eigen::ComplexEigenSolver<Mat2> es(u);
  const double k = std::ldexp(1., -static_cast<int>(j));
  Eigen::Vector2cd d;
  for (int i = 0; i < 2; ++i) d(i) = std::polar(1., std::arg(es.eigenvalues()(i)) * k);
  const Mat2 v = es.eigenvectors();
  return v * d.asDiagonal() * v.inverse();
}

void append_mcu_exact(Circuit& c, const std::vector<unsigned>& controls, unsigned target,
                      const Mat2& u) {
  if (controls.empty()) {
    c.add(make_u2(u, target));
    return;
  }
  if (controls.size() == 1) {
    c.add(make_cu2(u, controls[0], target));
    return;
  }
  // U = e^{i beta} W: C^k W directly, the phase as C^{k-1} P(beta) on the last control
  const double beta = std::arg(u.determinant()) / 2;
  append_mcmt_su2(c, controls, {target}, {std::polar(1., -beta) * u});
  const std::vector<unsigned> rest(controls.begin(), controls.end() - 1);
  append_mcu_exact(c, rest, controls.back(), phase_gate(beta));
}

// Base controls b1, r_1..r_k hold a counter v on r. With R = U^{1/2^k}:
//   R^v ; v += c ; R^{-v} ; v -= c      (c = AND of extras and b1)
// leaves U when c and every r_j are set, and R^{-1} whenever c alone is;
// the latter is the truncation, bounded by epsilon through the choice of k.
ApproxResult approx_mcu(unsigned n, const Mat2& u, double epsilon, const ApproxOptions& opt) {
  if (!is_unitary(u)) throw ApproxError("approx_mcu: matrix is not unitary");
  const Su2Angle sa = su2_angle(u);
  ApproxParams p;
  p.epsilon = epsilon;
  p.theta = sa.theta;
  p.alpha = sa.alpha;
  p.n_b = opt.n_b ? *opt.n_b : nb_from_epsilon(sa.theta, epsilon);
  if (p.n_b < 1) throw ApproxError("approx_mcu: n_b must be at least 1");
  if (n < p.n_b + 5)
    throw ApproxError(fmt::format("approx_mcu: need n ≥ n_b + 5 = {} (n_b = {}), got n = {}",
                                  p.n_b + 5, p.n_b, n));
  p.n_e = n - p.n_b;

  Circuit c(n + 1);
  const unsigned target = n, k = p.n_b - 1;
  std::vector<unsigned> ctrl;  // extras then b1
  for (unsigned q = 0; q <= p.n_e; ++q) ctrl.push_back(q);
  std::vector<unsigned> r;
  for (unsigned j = 0; j < k; ++j) r.push_back(p.n_e + 1 + j);

  if (k > 0) {
    auto roots = [&](bool dagger) {
      for (unsigned j = 0; j < k; ++j) {
        const Mat2 g = root_gate(u, k - j);
        c.add(make_cu2(dagger ? Mat2(g.adjoint()) : g, r[j], target));
      }
    };
    roots(false);
    append_shift(c, ctrl, r, +1);
    roots(true);
    append_shift(c, ctrl, r, -1);
  }
  if (opt.exact) append_mcu_exact(c, ctrl, target, root_gate(u, k));
  return {c, p, report(c)};
}

}  // namespace cnx
