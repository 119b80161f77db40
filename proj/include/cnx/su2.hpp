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
#include <random>
#include <string_view>
#include <vector>

#include "cnx/circuit.hpp"
#include "cnx/mcx.hpp"

namespace cnx {

class Su2Error : public std::domain_error {
 public:
  explicit Su2Error(const std::string& message) : std::domain_error(message) {}
};

bool is_su2(const Mat2& w, double tol = 1e-10);

// Haar-random element of SU(2).
Mat2 random_su2(std::mt19937_64& rng);

// Square root with eigenphases halved into (-pi/2, pi/2]; -I maps to diag(i, -i).
Mat2 principal_sqrt_su2(const Mat2& w);

// A in SU(2) with (X A X A^†)^2 = W. Solvable exactly when W has no X-axis
// component; throws Su2Error otherwise.
Mat2 find_conjugating_gate(const Mat2& w);

// General SU(2): W = S (X A X A^†)^2 S^† with S a Z rotation.
struct ConjugatingPair {
  Mat2 a;
  Mat2 s;
};
ConjugatingPair conjugating_pair(const Mat2& w);

// C^n (X ⊗ ... ⊗ X): controls [0, n), targets [n, n + m), clean ancilla n + m.
Circuit mcmt_x(unsigned n, unsigned m);

void append_mcmt_x(Circuit& c, const std::vector<unsigned>& controls,
                   const std::vector<unsigned>& targets, unsigned anc, AncillaMode mode);

// Copies of `src` into `dst` by doubling; the inverse first, if `undo`.
void append_fanout(Circuit& c, unsigned src, const std::vector<unsigned>& dst, bool undo);

// C^n (W_1 ⊗ ... ⊗ W_m): controls [0, n), targets [n, n + m); no ancilla.
struct McmtSpec {
  unsigned n = 3;
  std::vector<Mat2> gates;
};
Circuit mcmt_su2(const McmtSpec& spec);

void append_mcmt_su2(Circuit& c, const std::vector<unsigned>& controls,
                     const std::vector<unsigned>& targets, const std::vector<Mat2>& gates);

enum class Baseline { silva_linear_su2, silva_approx, khattar_clean, khattar_dirty, fit_ours, fit_khattar };

Baseline baseline_from_name(std::string_view s);

struct BaselineCounts {
  double cnot = 0;
  std::optional<double> depth;
};

// Published closed forms; silva_approx reads n as total controls and m as n_b.
BaselineCounts baseline_counts(Baseline family, unsigned n, unsigned m = 1);

}  // namespace cnx
