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

#include <doctest.h>

#include <numbers>
#include <random>

#include "cnx/approx.hpp"
#include "cnx/euler.hpp"
#include "cnx/sim.hpp"
#include "cnx/su2.hpp"

using namespace cnx;
using K = GateKind;

namespace {

constexpr double kPi = std::numbers::pi;
const Mat2 kX = (Mat2() << 0, 1, 1, 0).finished();

Mat2 power(Mat2 u, unsigned k) {
  Mat2 r = Mat2::Identity();
  for (unsigned i = 0; i < k; ++i) r = r * u;
  return r;
}

// spectral error of a synthesized C^n U, via the block structure
BlockDistance error_of(const ApproxResult& r, unsigned n, const Mat2& u) {
  auto m = unitary_of(r.circuit);
  undo_controlled_oracle(m, n, {u});
  return block_spectral_distance(m, n);
}

std::size_t bound(unsigned n, unsigned nb) { return 4 * (nb - 1) * (nb - 1) + 24 * n - 8 * nb - 4; }

}  // namespace

TEST_CASE("su2_angle") {
  auto a = su2_angle(Mat2::Identity());
  CHECK(a.theta == doctest::Approx(0));
  CHECK(a.alpha == doctest::Approx(0));
  a = su2_angle(kX);
  CHECK(a.theta == doctest::Approx(kPi));
  CHECK(a.alpha == doctest::Approx(kPi / 2));
  a = su2_angle(rz(0.3));
  CHECK(a.theta == doctest::Approx(0.3));
  CHECK(a.alpha == doctest::Approx(0).epsilon(1e-12));
  std::mt19937_64 rng(4);
  for (int i = 0; i < 50; ++i) {
    const Mat2 u = std::polar(1., 0.7 * i) * random_su2(rng);
    const auto s = su2_angle(u);
    CHECK(s.theta >= 0);
    CHECK(s.theta < 2 * kPi);
    const Mat2 v = std::polar(1., -s.alpha) * u;
    CHECK(std::abs(v.determinant() - 1.) < 1e-12);
    CHECK(std::abs(v.trace().real() - 2 * std::cos(s.theta / 2)) < 1e-12);
  }
  Mat2 bad;
  bad << 1, 1, 0, 1;
  CHECK_THROWS_AS(su2_angle(bad), ApproxError);
}

TEST_CASE("nb_from_epsilon") {
  CHECK(nb_from_epsilon(kPi, 1e-3) == 12);
  CHECK(nb_from_epsilon(kPi, 0.1) == 5);
  const double eps = 0.5;
  CHECK(nb_from_epsilon(std::acos(1 - eps * eps / 2), eps) == 1);
  CHECK_THROWS_AS(nb_from_epsilon(0., 0.1), ApproxError);
  CHECK_THROWS_AS(nb_from_epsilon(kPi, 2.0), ApproxError);
  CHECK_THROWS_AS(nb_from_epsilon(kPi, 0.), ApproxError);
}

TEST_CASE("root_gate") {
  const Mat2 z = (Mat2() << 1, 0, 0, -1).finished();
  const Mat2 s = (Mat2() << 1, 0, 0, std::complex<double>(0, 1)).finished();
  CHECK((root_gate(z, 1) - s).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((power(root_gate(kX, 2), 4) - kX).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(root_gate(kX, 0) == kX);
  std::mt19937_64 rng(8);
  for (unsigned j = 1; j <= 6; ++j) {
    const Mat2 u = std::polar(1., 0.3 * j) * random_su2(rng);
    CHECK((power(root_gate(u, j), 1u << j) - u).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("approx_mcu: U = X, eps = 0.1, n = 10") {
  const ApproxResult r = approx_mcu(10, kX, 0.1);
  CHECK(r.params.n_b == 5);
  CHECK(r.params.n_e == 5);
  CHECK(r.circuit.n_qubits() == 11);
  CHECK(r.report.cnot_count <= 260);
  CHECK(r.report.cnot_count == 212);  // frozen
  const auto e = error_of(r, 10, kX);
  CHECK(e.leakage < 1e-10);
  CHECK(e.bound() <= 0.1);
  // the truncation error is exactly |1 - e^{i theta / 2^{n_b}}|
  CHECK(e.distance == doctest::Approx(2 * std::sin(kPi / 64)).epsilon(1e-9));
}

TEST_CASE("approx_mcu: count slope is 24 per control") {
  const std::size_t c10 = approx_mcu(10, kX, 0.1).report.cnot_count;
  CHECK(approx_mcu(12, kX, 0.1).report.cnot_count == c10 + 48);
  for (double eps : {0.3, 0.1, 0.02})
    for (unsigned n = 20; n < 60; ++n) {
      const auto a = approx_mcu(n, kX, eps), b = approx_mcu(n + 1, kX, eps);
      CHECK(b.report.cnot_count - a.report.cnot_count == 24);
      CHECK(a.report.cnot_count <= bound(n, a.params.n_b));
    }
}

TEST_CASE("approx_mcu: tiny rotation clamps n_b to 1") {
  const Mat2 u = rz(1e-6);
  CHECK_THROWS_AS(approx_mcu(5, u, 0.5), ApproxError);
  const ApproxResult r = approx_mcu(6, u, 0.5);
  CHECK(r.params.n_b == 1);
  CHECK(error_of(r, 6, u).bound() < 1e-6);
}

TEST_CASE("approx_mcu: below the minimum n") {
  try {
    approx_mcu(3, kX, 0.1);
    FAIL("expected an error");
  } catch (const ApproxError& e) {
    CHECK(std::string(e.what()).find("n ≥ n_b + 5 = 10") != std::string::npos);
  }
  CHECK_THROWS_AS(approx_mcu(10, Mat2::Identity(), 0.1), ApproxError);
}

TEST_CASE("approx_mcu: error shrinks as n_b grows") {
  const unsigned n = 10;
  double prev = 3.;
  for (unsigned nb = 1; nb <= 5; ++nb) {
    ApproxOptions o;
    o.n_b = nb;
    const double e = error_of(approx_mcu(n, kX, 0.1, o), n, kX).bound();
    CHECK(e <= prev + 1e-12);
    prev = e;
  }
}

TEST_CASE("approx_mcu: keeping the dropped correction makes it exact") {
  std::mt19937_64 rng(12);
  ApproxOptions o;
  o.exact = true;
  o.n_b = 2;
  for (const Mat2& u : {kX, rz(0.9), Mat2(std::polar(1., 0.4) * random_su2(rng))}) {
    for (unsigned n : {7u, 8u, 9u}) {
      const ApproxResult r = approx_mcu(n, u, 0.3, o);
      auto m = unitary_of(r.circuit);
      CHECK(equiv(m, controlled_oracle(n, {u}), {EquivKind::global_phase, {}}, 1e-9).pass);
    }
  }
}

TEST_CASE("approx_mcu: error within epsilon for SU(2) targets") {
  std::mt19937_64 rng(99);
  for (double eps : {0.5, 0.2}) {
    const Mat2 w = random_su2(rng);
    const ApproxResult r = approx_mcu(approx_mcu(20, w, eps).params.n_b + 5, w, eps);
    const unsigned n = r.circuit.n_qubits() - 1;
    if (n + 1 > 11) continue;
    CHECK(error_of(r, n, w).bound() <= eps);
  }
}

TEST_CASE("append_mcu_exact") {
  std::mt19937_64 rng(21);
  for (unsigned k = 0; k <= 5; ++k) {
    const Mat2 u = std::polar(1., 1.1) * random_su2(rng);
    Circuit c(k + 1);
    std::vector<unsigned> ctrl(k);
    for (unsigned i = 0; i < k; ++i) ctrl[i] = i;
    append_mcu_exact(c, ctrl, k, u);
    CHECK(equiv(unitary_of(c), controlled_oracle(k, {u}), {EquivKind::exact, {}}, 1e-9).pass);
  }
}
