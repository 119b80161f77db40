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

#include "cnx/su2.hpp"

#include <cmath>
#include <numbers>

#include "cnx/euler.hpp"

namespace cnx {

namespace {

using cd = std::complex<double>;

// w = w0 I + i (x X + y Y + z Z)
struct Quat {
  double w0, x, y, z;
};

Quat quat(const Mat2& u) {
  return {0.5 * (u(0, 0) + u(1, 1)).real(), 0.5 * (u(0, 1) + u(1, 0)).imag(),
          0.5 * (u(0, 1) - u(1, 0)).real(), 0.5 * (u(0, 0) - u(1, 1)).imag()};
}

Mat2 from_quat(const Quat& q) {
  Mat2 m;
  m << cd(q.w0, q.z), cd(q.y, q.x), cd(-q.y, q.x), cd(q.w0, -q.z);
  return m;
}

const Mat2& pauli_x() {
  static const Mat2 m = (Mat2() << 0, 1, 1, 0).finished();
  return m;
}

double residual(const Mat2& a, const Mat2& w) {
  const Mat2 v = pauli_x() * a * pauli_x() * a.adjoint();
  return (v * v - w).cwiseAbs().maxCoeff();
}

}  // namespace

bool is_su2(const Mat2& w, double tol) {
  return (w.adjoint() * w - Mat2::Identity()).cwiseAbs().maxCoeff() < tol &&
         std::abs(w.determinant() - 1.) < tol;
}

Mat2 random_su2(std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  Quat q{nd(rng), nd(rng), nd(rng), nd(rng)};
  const double s = std::sqrt(q.w0 * q.w0 + q.x * q.x + q.y * q.y + q.z * q.z);
  return from_quat({q.w0 / s, q.x / s, q.y / s, q.z / s});
}

Mat2 principal_sqrt_su2(const Mat2& w) {
  const Quat q = quat(w);
  const double s = std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
  const double phi = std::atan2(s, q.w0);  // w = exp(i phi m.sigma), phi in [0, pi]
  if (s < 1e-14) {
    if (q.w0 > 0) return Mat2::Identity();
    return from_quat({0, 0, 0, 1});
  }
  const double k = std::sin(phi / 2) / s;
  return from_quat({std::cos(phi / 2), k * q.x, k * q.y, k * q.z});
}

Mat2 find_conjugating_gate(const Mat2& w) {
  if (!is_su2(w)) throw Su2Error("find_conjugating_gate: W is not in SU(2)");
  const Quat v = quat(principal_sqrt_su2(w));
  // X A X A^† = X (A X A^†), so A must rotate x̂ onto n = (v0, vz, -vy)
  // and V can carry no X component.
  if (std::abs(v.x) > 1e-10)
    throw Su2Error("find_conjugating_gate: W has an X-axis component; no exact A");
  const double nx = v.w0, ny = v.z, nz = -v.y;
  const double c = std::hypot(ny, nz);
  Mat2 a;
  if (c < 1e-14) {
    a = nx > 0 ? Mat2::Identity() : from_quat({0, 0, 0, -1});
  } else {
    // geodesic rotation about x̂ × n, the choice closest to the identity
    const double alpha = std::atan2(c, nx);
    const double k = -std::sin(alpha / 2) / c;
    a = from_quat({std::cos(alpha / 2), 0, k * -nz, k * ny});
  }
  if (residual(a, w) > 1e-9) throw Su2Error("find_conjugating_gate: residual above 1e-9");
  return a;
}

ConjugatingPair conjugating_pair(const Mat2& w) {
  if (!is_su2(w)) throw Su2Error("conjugating_pair: W is not in SU(2)");
  const Quat q = quat(w);
  if (std::abs(q.x) < 1e-12) return {find_conjugating_gate(w), Mat2::Identity()};
  // S^† W S rotates W's axis by -psi about z; land it on ŷ
  const double psi = std::atan2(q.y, q.x) - std::numbers::pi / 2;
  const Mat2 s = rz(psi);
  Mat2 inner = s.adjoint() * w * s;
  Quat qi = quat(inner);
  qi.x = 0;  // exact zero by construction, up to rounding
  inner = from_quat(qi);
  return {find_conjugating_gate(inner), s};
}

void append_fanout(Circuit& c, unsigned src, const std::vector<unsigned>& dst, bool undo) {
  std::vector<unsigned> all{src};
  all.insert(all.end(), dst.begin(), dst.end());
  Circuit f(c.n_qubits());
  for (std::size_t step = 1; step < all.size(); step *= 2)
    for (std::size_t i = 0; i < step && i + step < all.size(); ++i)
      f.add(GateKind::CX, {all[i], all[i + step]});
  c.append(undo ? inverse(f) : f);
}

void append_mcmt_x(Circuit& c, const std::vector<unsigned>& controls,
                   const std::vector<unsigned>& targets, unsigned anc, AncillaMode mode) {
  if (targets.empty()) throw CircuitError("mcmt_x: no targets");
  const std::vector<unsigned> rest(targets.begin() + 1, targets.end());
  append_fanout(c, targets[0], rest, true);
  append_mcx(c, controls, targets[0], anc, mode);
  append_fanout(c, targets[0], rest, false);
}

Circuit mcmt_x(unsigned n, unsigned m) {
  if (n < 1 || m < 1) throw CircuitError("mcmt_x: need n >= 1 and m >= 1");
  Circuit c(n + m + 1);
  c.set_role(n + m, AncillaRole::clean);
  std::vector<unsigned> controls(n), targets(m);
  for (unsigned i = 0; i < n; ++i) controls[i] = i;
  for (unsigned i = 0; i < m; ++i) targets[i] = n + i;
  append_mcmt_x(c, controls, targets, n + m, AncillaMode::clean);
  return c;
}

// With a = AND(k1), b = k2, the target sees X^b A X^a A^† X^b A X^a A^†:
// (X A X A^†)^2 when both fire, and the identity otherwise. The k1 gates use
// k2 (flipped) as their ancilla: clean exactly when b = 1, and when b = 0
// the two copies cancel because each is an involution.
void append_mcmt_su2(Circuit& c, const std::vector<unsigned>& controls,
                     const std::vector<unsigned>& targets, const std::vector<Mat2>& gates) {
  if (controls.size() < 2) throw CircuitError("mcmt_su2: need at least two controls");
  if (targets.size() != gates.size() || targets.empty())
    throw CircuitError("mcmt_su2: one gate per target required");
  std::vector<ConjugatingPair> ps;
  for (const Mat2& w : gates) ps.push_back(conjugating_pair(w));

  const std::vector<unsigned> k1(controls.begin(), controls.end() - 1);
  const unsigned k2 = controls.back();
  const bool flip = k1.size() >= 3;  // smaller Toffolis leave the ancilla alone

  auto layer = [&](bool dagger, bool with_s) {
    for (std::size_t i = 0; i < targets.size(); ++i) {
      Mat2 u = dagger ? ps[i].a.adjoint() : ps[i].a;
      if (with_s) u = u * ps[i].s.adjoint();
      c.add(make_u2(u, targets[i]));
    }
  };
  auto multi_x = [&]() {
    if (flip) c.add(GateKind::X, {k2});
    append_mcmt_x(c, k1, targets, k2, AncillaMode::clean);
    if (flip) c.add(GateKind::X, {k2});
  };
  auto k2_x = [&]() {
    const std::vector<unsigned> rest(targets.begin() + 1, targets.end());
    append_fanout(c, targets[0], rest, true);
    c.add(GateKind::CX, {k2, targets[0]});
    append_fanout(c, targets[0], rest, false);
  };

  layer(true, true);
  multi_x();
  layer(false, false);
  k2_x();
  layer(true, false);
  multi_x();
  layer(false, false);
  k2_x();
  for (std::size_t i = 0; i < targets.size(); ++i)
    if (!ps[i].s.isIdentity(0.)) c.add(make_u2(ps[i].s, targets[i]));
}

Circuit mcmt_su2(const McmtSpec& spec) {
  if (spec.n < 2) throw CircuitError("mcmt_su2: need n >= 2");
  for (const Mat2& w : spec.gates)
    if (!is_su2(w)) throw Su2Error("mcmt_su2: target gate not in SU(2)");
  const auto m = static_cast<unsigned>(spec.gates.size());
  Circuit c(spec.n + m);
  std::vector<unsigned> controls(spec.n), targets(m);
  for (unsigned i = 0; i < spec.n; ++i) controls[i] = i;
  for (unsigned i = 0; i < m; ++i) targets[i] = spec.n + i;
  append_mcmt_su2(c, controls, targets, spec.gates);
  return c;
}

Baseline baseline_from_name(std::string_view s) {
  if (s == "silva_linear_su2") return Baseline::silva_linear_su2;
  if (s == "silva_approx") return Baseline::silva_approx;
  if (s == "khattar_clean") return Baseline::khattar_clean;
  if (s == "khattar_dirty") return Baseline::khattar_dirty;
  if (s == "fit_ours") return Baseline::fit_ours;
  if (s == "fit_khattar") return Baseline::fit_khattar;
  throw std::invalid_argument("unknown baseline family '" + std::string(s) + "'");
}

BaselineCounts baseline_counts(Baseline family, unsigned n, unsigned m) {
  const double N = n, M = m, lg = std::log2(N);
  switch (family) {
    case Baseline::silva_linear_su2:
      return {16 * N + 8 * M - 32, 32 * N + 8 * M - 52};
    case Baseline::silva_approx: {
      // two linear multi-target blocks on (n_e + 1) controls and n_b - 1 targets
      const double ne = N - M, t = M - 1;
      return {4 * t * t + 2 * (16 * (ne + 1) + 8 * t - 32),
              2 * (32 * (ne + 1) + 8 * t - 52)};
    }
    case Baseline::khattar_clean:
      return {8 * N - 12, 29.3675 * lg - 28.2752};
    case Baseline::khattar_dirty:
      return {16 * N - 32, std::nullopt};
    case Baseline::fit_ours:
      return {6 * N - 6, 25.5903 * lg - 12.1237};
    case Baseline::fit_khattar:
      return {8 * N - 12, 29.3675 * lg - 28.2752};
  }
  return {};
}

}  // namespace cnx
