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

#include "cnx/circuit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "cnx/euler.hpp"

namespace cnx {

namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

struct KindInfo {
  GateKind kind;
  std::string_view name;
  unsigned arity;
};

constexpr std::array<KindInfo, 12> kKinds{{
    {GateKind::X, "x", 1},
    {GateKind::H, "h", 1},
    {GateKind::T, "t", 1},
    {GateKind::Tdg, "tdg", 1},
    {GateKind::Rx, "rx", 1},
    {GateKind::Ry, "ry", 1},
    {GateKind::Rz, "rz", 1},
    {GateKind::U2, "u2", 1},
    {GateKind::CX, "cx", 2},
    {GateKind::CCX, "ccx", 3},
    {GateKind::RCCX, "rccx", 3},
    {GateKind::CU2, "cu2", 2},
}};

const KindInfo& info(GateKind k) {
  return kKinds[static_cast<std::size_t>(k)];
}

bool is_unitary(const Mat2& u) {
  return ((u.adjoint() * u - Mat2::Identity()).cwiseAbs().maxCoeff()) < 1e-12;
}

}  // namespace

std::string_view kind_name(GateKind k) { return info(k).name; }

GateKind kind_from_name(std::string_view s) {
  for (const auto& ki : kKinds)
    if (ki.name == s) return ki.kind;
  throw CircuitError("unknown gate kind '" + std::string(s) + "'");
}

unsigned arity(GateKind k) { return info(k).arity; }

bool is_single_qubit(GateKind k) { return arity(k) == 1; }

bool is_macro(GateKind k) {
  return k == GateKind::CCX || k == GateKind::RCCX || k == GateKind::CU2;
}

bool Gate::operator==(const Gate& o) const {
  if (kind != o.kind || qubits != o.qubits) return false;
  switch (kind) {
    case GateKind::Rx:
    case GateKind::Ry:
    case GateKind::Rz:
      return angle == o.angle;
    case GateKind::U2:
    case GateKind::CU2:
      return matrix == o.matrix;
    default:
      return true;
  }
}

Gate make_gate(GateKind k, std::vector<unsigned> qubits) {
  if (qubits.size() != arity(k))
    throw CircuitError("arity mismatch for " + std::string(kind_name(k)));
  for (std::size_t i = 0; i < qubits.size(); ++i)
    for (std::size_t j = i + 1; j < qubits.size(); ++j)
      if (qubits[i] == qubits[j]) throw CircuitError("repeated qubit operand");
  return Gate{k, std::move(qubits)};
}

Gate make_rotation(GateKind k, unsigned q, double angle) {
  if (k != GateKind::Rx && k != GateKind::Ry && k != GateKind::Rz)
    throw CircuitError("not a rotation kind");
  Gate g = make_gate(k, {q});
  g.angle = angle;
  return g;
}

Gate make_u2(const Mat2& u, unsigned q) {
  if (!is_unitary(u)) throw CircuitError("U2 matrix is not unitary");
  Gate g = make_gate(GateKind::U2, {q});
  g.matrix = u;
  return g;
}

Gate make_cu2(const Mat2& u, unsigned control, unsigned target) {
  if (!is_unitary(u)) throw CircuitError("CU2 matrix is not unitary");
  Gate g = make_gate(GateKind::CU2, {control, target});
  g.matrix = u;
  return g;
}

Mat2 single_qubit_matrix(const Gate& g) {
  const double r = 1. / std::sqrt(2.);
  const double h = g.angle / 2;
  Mat2 m;
  switch (g.kind) {
    case GateKind::X:
      m << 0, 1, 1, 0;
      return m;
    case GateKind::H:
      m << r, r, r, -r;
      return m;
    case GateKind::T:
      m << 1, 0, 0, std::polar(1., kPi / 4);
      return m;
    case GateKind::Tdg:
      m << 1, 0, 0, std::polar(1., -kPi / 4);
      return m;
    case GateKind::Rx:
      m << std::cos(h), cd(0, -std::sin(h)), cd(0, -std::sin(h)), std::cos(h);
      return m;
    case GateKind::Ry:
      m << std::cos(h), -std::sin(h), std::sin(h), std::cos(h);
      return m;
    case GateKind::Rz:
      m << std::polar(1., -h), 0, 0, std::polar(1., h);
      return m;
    case GateKind::U2:
      return g.matrix;
    default:
      throw CircuitError("not a single-qubit gate");
  }
}

Gate adjoint(const Gate& g) {
  Gate a = g;
  switch (g.kind) {
    case GateKind::T:
      a.kind = GateKind::Tdg;
      break;
    case GateKind::Tdg:
      a.kind = GateKind::T;
      break;
    case GateKind::Rx:
    case GateKind::Ry:
    case GateKind::Rz:
      a.angle = -g.angle;
      break;
    case GateKind::U2:
    case GateKind::CU2:
      a.matrix = g.matrix.adjoint();
      break;
    case GateKind::RCCX:
      throw CircuitError("RCCX has no adjoint within the gate set; lower first");
    default:
      break;
  }
  return a;
}

Circuit::Circuit(unsigned n_qubits)
    : n_(n_qubits), roles_(n_qubits, AncillaRole::none) {}

void Circuit::set_role(unsigned q, AncillaRole r) {
  if (q >= n_) throw CircuitError("role on qubit out of range");
  roles_[q] = r;
}

Circuit& Circuit::add(Gate g) {
  for (unsigned q : g.qubits)
    if (q >= n_) throw CircuitError("qubit index out of range");
  gates_.push_back(std::move(g));
  return *this;
}

Circuit& Circuit::append(const Circuit& other, const std::vector<unsigned>& wires) {
  if (!wires.empty() && wires.size() != other.n_qubits())
    throw CircuitError("wire map size mismatch");
  for (Gate g : other.gates()) {
    if (!wires.empty())
      for (unsigned& q : g.qubits) q = wires[q];
    add(std::move(g));
  }
  return *this;
}

namespace {

void lower_ccx(Circuit& out, unsigned a, unsigned b, unsigned t) {
  using K = GateKind;
  out.add(K::H, {t});
  out.add(K::CX, {b, t});
  out.add(K::Tdg, {t});
  out.add(K::CX, {a, t});
  out.add(K::T, {t});
  out.add(K::CX, {b, t});
  out.add(K::Tdg, {t});
  out.add(K::CX, {a, t});
  out.add(K::T, {b});
  out.add(K::T, {t});
  out.add(K::H, {t});
  out.add(K::CX, {a, b});
  out.add(K::T, {a});
  out.add(K::Tdg, {b});
  out.add(K::CX, {a, b});
}

// The defining network of the relative-phase Toffoli.
void lower_rccx(Circuit& out, unsigned a, unsigned b, unsigned t) {
  using K = GateKind;
  out.add(K::H, {t});
  out.add(K::T, {t});
  out.add(K::CX, {b, t});
  out.add(K::Tdg, {t});
  out.add(K::CX, {a, t});
  out.add(K::T, {t});
  out.add(K::CX, {b, t});
  out.add(K::Tdg, {t});
  out.add(K::H, {t});
}

// u = e^{i g} A X B X C with ABC = I.
void lower_cu2(Circuit& out, const Mat2& u, unsigned c, unsigned t) {
  const ZYZ e = zyz(u);
  const Mat2 A = rz(e.beta) * ry(e.gamma / 2);
  const Mat2 B = ry(-e.gamma / 2) * rz(-(e.delta + e.beta) / 2);
  const Mat2 C = rz((e.delta - e.beta) / 2);
  Mat2 ph;
  ph << 1, 0, 0, std::polar(1., e.phase);
  out.add(make_u2(C, t));
  out.add(GateKind::CX, {c, t});
  out.add(make_u2(B, t));
  out.add(GateKind::CX, {c, t});
  out.add(make_u2(A, t));
  out.add(make_u2(ph, c));
}

}  // namespace

Circuit lower(const Circuit& c) {
  Circuit out(c.n_qubits());
  for (unsigned q = 0; q < c.n_qubits(); ++q) out.set_role(q, c.ancilla_roles()[q]);
  for (const Gate& g : c.gates()) {
    const auto& q = g.qubits;
    switch (g.kind) {
      case GateKind::CCX:
        lower_ccx(out, q[0], q[1], q[2]);
        break;
      case GateKind::RCCX:
        lower_rccx(out, q[0], q[1], q[2]);
        break;
      case GateKind::CU2:
        lower_cu2(out, g.matrix, q[0], q[1]);
        break;
      default:
        out.add(g);
    }
  }
  return out;
}

std::size_t count_gates(const Circuit& c, GateKind k) {
  return std::count_if(c.gates().begin(), c.gates().end(),
                       [k](const Gate& g) { return g.kind == k; });
}

std::size_t depth(const Circuit& c) {
  std::vector<std::size_t> level(c.n_qubits(), 0);
  std::size_t d = 0;
  for (const Gate& g : c.gates()) {
    std::size_t l = 0;
    for (unsigned q : g.qubits) l = std::max(l, level[q]);
    ++l;
    for (unsigned q : g.qubits) level[q] = l;
    d = std::max(d, l);
  }
  return d;
}

Circuit inverse(const Circuit& c) {
  Circuit out(c.n_qubits());
  for (unsigned q = 0; q < c.n_qubits(); ++q) out.set_role(q, c.ancilla_roles()[q]);
  const auto& gs = c.gates();
  for (auto it = gs.rbegin(); it != gs.rend(); ++it) {
    if (it->kind == GateKind::RCCX) {
      out.append(inverse(lower(Circuit(c.n_qubits()).add(*it))));
      continue;
    }
    out.add(adjoint(*it));
  }
  return out;
}

Circuit compose(const Circuit& first, const Circuit& second) {
  if (first.n_qubits() != second.n_qubits())
    throw CircuitError("compose: register size mismatch");
  Circuit out = first;
  out.append(second);
  return out;
}

DecompReport report(const Circuit& c) {
  const Circuit l = lower(c);
  DecompReport r;
  r.cnot_count = count_gates(l, GateKind::CX);
  r.total_gates = l.size();
  r.depth = depth(l);
  for (AncillaRole role : c.ancilla_roles()) {
    if (role == AncillaRole::none) continue;
    ++r.num_ancilla;
    r.ancilla_kind = role;
  }
  return r;
}

}  // namespace cnx
