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

#include "cnx/circuit.hpp"
#include "cnx/euler.hpp"
#include "cnx/mcx.hpp"
#include "cnx/sim.hpp"

using namespace cnx;

namespace {

using K = GateKind;

Circuit random_circuit(unsigned n, unsigned len, std::mt19937_64& rng) {
  Circuit c(n);
  std::uniform_int_distribution<unsigned> q(0, n - 1), kind(0, 7);
  std::uniform_real_distribution<double> ang(-3, 3);
  for (unsigned i = 0; i < len; ++i) {
    const unsigned a = q(rng);
    unsigned b = q(rng);
    while (b == a) b = q(rng);
    unsigned t = q(rng);
    while (t == a || t == b) t = q(rng);
    switch (kind(rng)) {
      case 0: c.add(K::H, {a}); break;
      case 1: c.add(K::T, {a}); break;
      case 2: c.add(make_rotation(K::Ry, a, ang(rng))); break;
      case 3: c.add(make_rotation(K::Rz, a, ang(rng))); break;
      case 4: c.add(K::CX, {a, b}); break;
      case 5: c.add(K::CCX, {a, b, t}); break;
      case 6: c.add(K::RCCX, {a, b, t}); break;
      default: c.add(make_cu2(rx(ang(rng)), a, b));
    }
  }
  return c;
}

bool only_lowered(const Circuit& c) {
  for (const Gate& g : c.gates())
    if (!is_single_qubit(g.kind) && g.kind != K::CX) return false;
  return true;
}

}  // namespace

TEST_CASE("lower: CCX is the 6 CX network") {
  const Circuit c = lower(Circuit(3).add(K::CCX, {0, 1, 2}));
  CHECK(count_gates(c, K::CX) == 6);
  CHECK(only_lowered(c));
}

TEST_CASE("lower: RCCX uses 3 CX") {
  const Circuit c = lower(Circuit(3).add(K::RCCX, {0, 1, 2}));
  CHECK(count_gates(c, K::CX) == 3);
  CHECK(only_lowered(c));
}

TEST_CASE("lower: CX unchanged") {
  const Circuit c = Circuit(2).add(K::CX, {0, 1});
  CHECK(lower(c) == c);
}

TEST_CASE("count_gates") {
  CHECK(count_gates(Circuit(4), K::CX) == 0);
  CHECK(count_gates(lower(mcx_log({8, AncillaMode::clean})), K::CX) == 42);
}

TEST_CASE("depth") {
  CHECK(depth(Circuit(3)) == 0);
  CHECK(depth(Circuit(4).add(K::CX, {0, 1}).add(K::CX, {2, 3})) == 1);
  const Circuit ladder = toffoli_ladder({{0, 1, 6}, {2, 3, 7}, {4, 5, 8}});
  CHECK(depth(lower(ladder)) == 7);
}

TEST_CASE("inverse") {
  CHECK(inverse(Circuit(1).add(K::T, {0})) == Circuit(1).add(K::Tdg, {0}));
  CHECK(inverse(Circuit(2).add(K::CX, {0, 1})) == Circuit(2).add(K::CX, {0, 1}));
  std::mt19937_64 rng(11);
  for (int s = 0; s < 10; ++s) {
    const Circuit c = random_circuit(4, 5, rng);
    const auto u = unitary_of(compose(c, inverse(c)));
    CHECK((u - Unitary<>::Identity(16, 16)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("gate validation") {
  CHECK_THROWS_AS(make_gate(K::CX, {1, 1}), CircuitError);
  CHECK_THROWS_AS(make_gate(K::CCX, {0, 1}), CircuitError);
  CHECK_THROWS_AS(Circuit(2).add(K::CX, {0, 2}), CircuitError);
  Mat2 bad;
  bad << 1, 1, 0, 1;
  CHECK_THROWS_AS(make_u2(bad, 0), CircuitError);
}

TEST_CASE("export: qasm statements") {
  const std::string q2 = export_text(Circuit(2).add(K::CX, {0, 1}), TextFormat::qasm2);
  CHECK(q2.find("qreg q[2];") != std::string::npos);
  CHECK(q2.find("cx q[0], q[1];") != std::string::npos);
  const std::string q3 =
      export_text(Circuit(3).add(make_rotation(K::Rz, 2, std::numbers::pi / 4)), TextFormat::qasm3);
  CHECK(q3.find("rz(0.78539816339744828) q[2];") != std::string::npos);
}

TEST_CASE("export: json round trip") {
  const Circuit c = lower(mcx_log({5, AncillaMode::clean}));
  const Circuit back = parse_json(export_text(c, TextFormat::json));
  CHECK(back == c);
  std::mt19937_64 rng(5);
  const Circuit r = random_circuit(5, 40, rng);
  CHECK(parse_json(export_text(r, TextFormat::json)) == r);
  CHECK_THROWS_AS(parse_json("{\"n\": 2, \"gates\": [{\"kind\": \"bogus\", \"qubits\": [0]}]}"),
                  CircuitError);
}

TEST_CASE("properties: composition, idempotent lowering, lowering preserves the unitary") {
  std::mt19937_64 rng(2026);
  for (int s = 0; s < 20; ++s) {
    const Circuit a = random_circuit(6, 12, rng), b = random_circuit(6, 9, rng);
    const Circuit ab = compose(a, b);
    CHECK(depth(ab) <= depth(a) + depth(b));
    for (K k : {K::CX, K::CCX, K::RCCX, K::H})
      CHECK(count_gates(ab, k) == count_gates(a, k) + count_gates(b, k));
    CHECK(lower(lower(ab)) == lower(ab));
    CHECK((unitary_of(lower(ab)) - unitary_of(ab)).cwiseAbs().maxCoeff() < 1e-12);
  }
}
