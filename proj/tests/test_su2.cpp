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

#include "cnx/bench.hpp"
#include "cnx/euler.hpp"
#include "cnx/sim.hpp"
#include "cnx/su2.hpp"

using namespace cnx;
using K = GateKind;

namespace {

const Mat2 kX = (Mat2() << 0, 1, 1, 0).finished();

std::size_t cx_of(const Circuit& c) { return count_gates(lower(c), K::CX); }

double residual(const Mat2& a, const Mat2& w) {
  const Mat2 v = kX * a * kX * a.adjoint();
  return (v * v - w).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("find_conjugating_gate examples") {
  CHECK(find_conjugating_gate(Mat2::Identity()).isApprox(Mat2::Identity(), 1e-14));
  for (double beta : {0.3, 1.0, -2.0, std::numbers::pi})
    CHECK((find_conjugating_gate(rz(beta)) - rz(-beta / 4)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(residual(find_conjugating_gate(-Mat2::Identity()), -Mat2::Identity()) < 1e-12);
  CHECK(residual(find_conjugating_gate(ry(0.7)), ry(0.7)) < 1e-12);
}

TEST_CASE("find_conjugating_gate: an X-axis component has no exact solution") {
  CHECK_THROWS_AS(find_conjugating_gate(rx(0.5)), Su2Error);
  CHECK_THROWS_AS(find_conjugating_gate(kX), Su2Error);  // not even SU(2)
}

TEST_CASE("conjugating_pair: 1000 seeded random SU(2)") {
  std::mt19937_64 rng(1000);
  double worst = 0.;
  for (int i = 0; i < 1000; ++i) {
    const Mat2 w = random_su2(rng);
    const auto p = conjugating_pair(w);
    const Mat2 v = kX * p.a * kX * p.a.adjoint();
    worst = std::max(worst, (p.s * v * v * p.s.adjoint() - w).cwiseAbs().maxCoeff());
    // A alone is exact whenever W has no X component
    const Mat2 inner = p.s.adjoint() * w * p.s;
    CHECK(residual(p.a, inner) < 1e-9);
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("mcmt_x examples") {
  CHECK(cx_of(mcmt_x(3, 1)) == 12);
  const Circuit c = mcmt_x(3, 4);
  CHECK(cx_of(c) <= 18);
  CHECK(check_mcmt_x(3, 4).pass);
  // n = 2, m = 7: the central CCX plus at most ceil(log2 7) fan-out layers per side;
  // one layer overlaps the CCX, so the frozen depth is 16
  const auto central = depth(lower(Circuit(3).add(K::CCX, {0, 1, 2})));
  CHECK(depth(lower(mcmt_x(2, 7))) <= central + 6);
  CHECK(depth(lower(mcmt_x(2, 7))) == 16);
}

TEST_CASE("mcmt_su2 examples") {
  const Circuit c = mcmt_su2({3, {rz(std::numbers::pi / 4), rz(std::numbers::pi / 4)}});
  CHECK(cx_of(c) <= 22);
  CHECK(check_mcmt_su2(3, {rz(std::numbers::pi / 4), rz(std::numbers::pi / 4)}).pass);

  const Circuit id = mcmt_su2({4, {Mat2::Identity(), Mat2::Identity()}});
  CHECK((unitary_of(id) - Unitary<>::Identity(64, 64)).cwiseAbs().maxCoeff() < 1e-12);

  CHECK(cx_of(mcmt_su2({6, {ry(0.7)}})) <= 50);
  CHECK(check_mcmt_su2(6, {ry(0.7)}).pass);
  CHECK_THROWS_AS(mcmt_su2({3, {kX}}), Su2Error);
}

TEST_CASE("mcmt_su2: n = 2 is exempt from the count formula, still exact") {
  std::mt19937_64 rng(2);
  for (unsigned m = 1; m <= 3; ++m) {
    std::vector<Mat2> ws;
    for (unsigned i = 0; i < m; ++i) ws.push_back(random_su2(rng));
    CHECK(check_mcmt_su2(2, ws).pass);
    CHECK(cx_of(mcmt_su2({2, ws})) == 8 * m - 4);
  }
}

TEST_CASE("oracle: n = 3..7, m = 1..3, five seeded lists") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    std::mt19937_64 rng(seed);
    for (unsigned n = 3; n <= 7; ++n)
      for (unsigned m = 1; m <= 3; ++m) {
        std::vector<Mat2> ws;
        for (unsigned i = 0; i < m; ++i) ws.push_back(random_su2(rng));
        const Check c = check_mcmt_su2(n, ws, 1e-9);
        INFO(c.what, " seed ", seed, " distance ", c.distance);
        CHECK(c.pass);
      }
  }
}

TEST_CASE("counts: mcmt_x equality and mcmt_su2 budget") {
  for (unsigned n = 3; n <= 200; n += 7)
    for (unsigned m = 1; n + m <= 300; m += 13) CHECK(cx_of(mcmt_x(n, m)) == 6 * n + 2 * m - 8);
  std::size_t prev_n = 0;
  for (unsigned n = 3; n <= 60; ++n) {
    std::size_t prev_m = 0;
    for (unsigned m = 1; m <= 4; ++m) {
      const std::size_t c = cx_of(mcmt_su2({n, std::vector<Mat2>(m, rx(0.4 + m))}));
      CHECK(c <= 12 * n + 8 * m - 30);
      CHECK(c >= prev_m);
      prev_m = c;
      if (m == 1) {
        CHECK(c >= prev_n);
        prev_n = c;
      }
    }
  }
}

TEST_CASE("depth: doubling the targets adds at most one fan-out layer per side") {
  for (unsigned n : {3u, 8u, 20u})
    for (unsigned m = 1; m <= 32; m *= 2)
      CHECK(depth(lower(mcmt_x(n, 2 * m))) - depth(lower(mcmt_x(n, m))) <= 2);
}

TEST_CASE("baseline_counts") {
  const auto s = baseline_counts(Baseline::silva_linear_su2, 10, 1);
  CHECK(s.cnot == 136);
  CHECK(*s.depth == 276);
  CHECK(baseline_counts(Baseline::khattar_clean, 10).cnot == 68);
  CHECK(baseline_counts(Baseline::khattar_dirty, 10).cnot == 128);
  CHECK(*baseline_counts(Baseline::fit_ours, 64).depth == doctest::Approx(141.42).epsilon(1e-4));
  CHECK(baseline_from_name("fit_khattar") == Baseline::fit_khattar);
  CHECK_THROWS(baseline_from_name("nope"));
}
