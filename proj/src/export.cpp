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

#include <fmt/format.h>

#include <cmath>
#include <json.hpp>

#include "cnx/circuit.hpp"
#include "cnx/euler.hpp"

namespace cnx {

namespace {

using nlohmann::json;

std::string num(double x) { return fmt::format("{:.17g}", x); }

std::string operands(const Gate& g) {
  std::string s;
  for (std::size_t i = 0; i < g.qubits.size(); ++i)
    s += fmt::format("{}q[{}]", i ? ", " : "", g.qubits[i]);
  return s;
}

std::string u3_call(const char* name, const U3Angles& a) {
  return fmt::format("{}({}, {}, {})", name, num(a.theta), num(a.phi), num(a.lambda));
}

std::string qasm(const Circuit& c, bool v3) {
  std::string out = v3 ? "OPENQASM 3.0;\ninclude \"stdgates.inc\";\n"
                       : "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  out += v3 ? fmt::format("qubit[{}] q;\n", c.n_qubits())
            : fmt::format("qreg q[{}];\n", c.n_qubits());
  for (const Gate& g : c.gates()) {
    switch (g.kind) {
      case GateKind::Rx:
      case GateKind::Ry:
      case GateKind::Rz:
        out += fmt::format("{}({}) {};\n", kind_name(g.kind), num(g.angle), operands(g));
        break;
      case GateKind::U2: {
        const U3Angles a = u3_angles(g.matrix);
        // global phase of an uncontrolled gate is dropped in the v2 dialect
        if (v3 && a.phase != 0.) out += fmt::format("gphase({});\n", num(a.phase));
        out += fmt::format("{} {};\n", u3_call(v3 ? "U" : "u3", a), operands(g));
        break;
      }
      case GateKind::CU2: {
        if (!v3) throw CircuitError("cu2 is not expressible in qasm2; lower first");
        const U3Angles a = u3_angles(g.matrix);
        if (a.phase != 0.)
          out += fmt::format("ctrl @ gphase({}) q[{}];\n", num(a.phase), g.qubits[0]);
        out += fmt::format("ctrl @ {} {};\n", u3_call("U", a), operands(g));
        break;
      }
      case GateKind::RCCX:
        throw CircuitError("rccx is not a standard gate; lower first");
      default:
        out += fmt::format("{} {};\n", kind_name(g.kind), operands(g));
    }
  }
  return out;
}

json to_json(const Circuit& c) {
  json gates = json::array();
  for (const Gate& g : c.gates()) {
    json jg = {{"kind", kind_name(g.kind)}, {"qubits", g.qubits}, {"params", json::array()}};
    if (g.kind == GateKind::Rx || g.kind == GateKind::Ry || g.kind == GateKind::Rz)
      jg["params"].push_back(g.angle);
    if (g.kind == GateKind::U2 || g.kind == GateKind::CU2) {
      json m = json::array();
      for (int r = 0; r < 2; ++r)
        for (int k = 0; k < 2; ++k) m.push_back({g.matrix(r, k).real(), g.matrix(r, k).imag()});
      jg["matrix"] = m;
    }
    gates.push_back(jg);
  }
  json out = {{"n", c.n_qubits()}, {"gates", gates}};
  json anc = json::object();
  for (unsigned q = 0; q < c.n_qubits(); ++q)
    if (c.ancilla_roles()[q] != AncillaRole::none)
      anc[std::to_string(q)] = c.ancilla_roles()[q] == AncillaRole::clean ? "clean" : "dirty";
  if (!anc.empty()) out["ancillas"] = anc;
  return out;
}

}  // namespace

TextFormat format_from_name(std::string_view s) {
  if (s == "qasm2") return TextFormat::qasm2;
  if (s == "qasm3") return TextFormat::qasm3;
  if (s == "json") return TextFormat::json;
  throw CircuitError("unknown format '" + std::string(s) + "'");
}

std::string export_text(const Circuit& c, TextFormat f) {
  switch (f) {
    case TextFormat::qasm2:
      return qasm(c, false);
    case TextFormat::qasm3:
      return qasm(c, true);
    case TextFormat::json:
      return to_json(c).dump(1) + "\n";
  }
  return {};
}

static Mat2 matrix_from_json(const nlohmann::json& m) {
  if (!m.is_array() || m.size() != 4) throw CircuitError("matrix must hold 4 [re,im] pairs");
  Mat2 u;
  for (int i = 0; i < 4; ++i)
    u(i / 2, i % 2) = {m[i].at(0).get<double>(), m[i].at(1).get<double>()};
  return u;
}

Mat2 parse_matrix_json(const std::string& text) {
  try {
    json j = json::parse(text);
    // also accept [[a, b], [c, d]] with real or [re, im] entries
    if (j.is_array() && j.size() == 2 && j[0].is_array() && j[0].size() == 2) {
      json flat = json::array();
      for (int i = 0; i < 4; ++i) {
        const json& e = j[i / 2].at(i % 2);
        flat.push_back(e.is_number() ? json::array({e, 0.}) : e);
      }
      j = flat;
    }
    return matrix_from_json(j);
  } catch (const json::exception& e) {
    throw CircuitError(std::string("bad matrix json: ") + e.what());
  }
}

Circuit parse_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw CircuitError(std::string("bad json: ") + e.what());
  }
  try {
    Circuit c(j.at("n").get<unsigned>());
    if (j.contains("ancillas"))
      for (const auto& [q, role] : j.at("ancillas").items()) {
        const auto r = role.get<std::string>();
        if (r != "clean" && r != "dirty") throw CircuitError("ancilla role must be clean or dirty");
        c.set_role(static_cast<unsigned>(std::stoul(q)), r == "clean" ? AncillaRole::clean : AncillaRole::dirty);
      }
    for (const json& jg : j.at("gates")) {
      const GateKind k = kind_from_name(jg.at("kind").get<std::string>());
      auto qs = jg.at("qubits").get<std::vector<unsigned>>();
      Gate g = make_gate(k, qs);
      if (k == GateKind::Rx || k == GateKind::Ry || k == GateKind::Rz)
        g.angle = jg.at("params").at(0).get<double>();
      if (k == GateKind::U2) g = make_u2(matrix_from_json(jg.at("matrix")), qs[0]);
      if (k == GateKind::CU2) g = make_cu2(matrix_from_json(jg.at("matrix")), qs[0], qs[1]);
      c.add(std::move(g));
    }
    return c;
  } catch (const json::exception& e) {
    throw CircuitError(std::string("bad circuit json: ") + e.what());
  }
}

}  // namespace cnx
