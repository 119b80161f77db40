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

#include <optional>
#include <vector>

#include "cnx/circuit.hpp"

namespace cnx {

class ApproxError : public std::domain_error {
 public:
  explicit ApproxError(const std::string& message) : std::domain_error(message) {}
};

struct ApproxParams {
  double epsilon = 0.;
  double theta = 0.;
  double alpha = 0.;
  unsigned n_b = 1;
  unsigned n_e = 0;
};

// U = e^{i alpha} V, V in SU(2) with eigenvalues e^{∓i theta / 2}, theta in [0, 2 pi).
struct Su2Angle {
  double theta;
  double alpha;
};
Su2Angle su2_angle(const Mat2& u);

// Smallest base register whose truncation error stays within epsilon.
unsigned nb_from_epsilon(double theta, double epsilon);

// Principal 2^j-th root: eigenphases in (-pi, pi] divided by 2^j.
Mat2 root_gate(const Mat2& u, unsigned j);

struct ApproxOptions {
  std::optional<unsigned> n_b;  // overrides the epsilon-derived value
  bool exact = false;           // keep the dropped correction (tests only)
};

struct ApproxResult {
  Circuit circuit;
  ApproxParams params;
  DecompReport report;
};

// C^n U on n + 1 qubits (controls [0, n), target n), no ancilla.
ApproxResult approx_mcu(unsigned n, const Mat2& u, double epsilon, const ApproxOptions& opt = {});

// Exact C^{controls} U for any U(2), ancilla-free; used for corrections.
void append_mcu_exact(Circuit& c, const std::vector<unsigned>& controls, unsigned target,
                      const Mat2& u);

}  // namespace cnx
