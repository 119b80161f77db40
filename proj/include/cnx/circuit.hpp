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

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cnx {

using Mat2 = Eigen::Matrix2cd;

class CircuitError : public std::logic_error {
 public:
  explicit CircuitError(const std::string& message)
      : std::logic_error(message) {}
};

enum class GateKind { X, H, T, Tdg, Rx, Ry, Rz, U2, CX, CCX, RCCX, CU2 };

enum class AncillaRole { none, clean, dirty };

std::string_view kind_name(GateKind k);
GateKind kind_from_name(std::string_view s);
unsigned arity(GateKind k);
bool is_single_qubit(GateKind k);
bool is_macro(GateKind k);

// Controls first, target last.
struct Gate {
  GateKind kind;
  std::vector<unsigned> qubits;
  double angle = 0.;       // Rx/Ry/Rz
  Mat2 matrix = Mat2::Identity();  // U2/CU2

  unsigned target() const { return qubits.back(); }
  bool operator==(const Gate& o) const;
};

Gate make_gate(GateKind k, std::vector<unsigned> qubits);
Gate make_rotation(GateKind k, unsigned q, double angle);
Gate make_u2(const Mat2& u, unsigned q);
Gate make_cu2(const Mat2& u, unsigned control, unsigned target);

// Matrix of any single-qubit kind.
Mat2 single_qubit_matrix(const Gate& g);
Gate adjoint(const Gate& g);

class Circuit {
 public:
  explicit Circuit(unsigned n_qubits = 0);

  unsigned n_qubits() const { return n_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  const std::vector<AncillaRole>& ancilla_roles() const { return roles_; }
  void set_role(unsigned q, AncillaRole r);

  Circuit& add(Gate g);
  Circuit& add(GateKind k, std::vector<unsigned> qubits) {
    return add(make_gate(k, std::move(qubits)));
  }
  // Appends `other`, with its qubit i mapped to wires[i] (identity if empty).
  Circuit& append(const Circuit& other, const std::vector<unsigned>& wires = {});

  bool operator==(const Circuit& o) const { return n_ == o.n_ && gates_ == o.gates_; }

 private:
  unsigned n_;
  std::vector<Gate> gates_;
  std::vector<AncillaRole> roles_;
};

struct DecompReport {
  std::size_t cnot_count = 0;
  std::size_t total_gates = 0;
  std::size_t depth = 0;
  unsigned num_ancilla = 0;
  AncillaRole ancilla_kind = AncillaRole::none;
};

Circuit lower(const Circuit& c);
std::size_t count_gates(const Circuit& c, GateKind k);
std::size_t depth(const Circuit& c);
Circuit inverse(const Circuit& c);
Circuit compose(const Circuit& first, const Circuit& second);
DecompReport report(const Circuit& c);

enum class TextFormat { qasm2, qasm3, json };

TextFormat format_from_name(std::string_view s);
std::string export_text(const Circuit& c, TextFormat f);
Circuit parse_json(const std::string& text);
// Four [re, im] pairs in row-major order, or [[a, b], [c, d]].
Mat2 parse_matrix_json(const std::string& text);

}  // namespace cnx
