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

#include <vector>

#include "cnx/circuit.hpp"

namespace cnx {

enum class AncillaMode { clean, dirty };

// Register layout: controls [0, n), target n, ancilla n + 1.
struct McxSpec {
  unsigned n = 1;
  AncillaMode mode = AncillaMode::clean;
};

// Toffoli up to a diagonal, 3 CX.
Circuit rccx();

// Relative-phase Toffolis on targets already set to |1> by an X; targets
// must be distinct.
struct LadderBlock {
  unsigned c1, c2, target;
};
Circuit toffoli_ladder(const std::vector<LadderBlock>& blocks, unsigned n_qubits = 0);

Circuit mcx_log(const McxSpec& spec);

// C^{controls} X onto `target`, borrowing `anc` (clean: must be |0>; dirty:
// any state, restored). Controls are reused as workspace internally.
void append_mcx(Circuit& c, const std::vector<unsigned>& controls, unsigned target,
                unsigned anc, AncillaMode mode);

// The AND tree behind mcx_log, in logical layout (controls 0..n-1,
// ancilla n + 1). Each node XORs AND(inputs) into `out`, after an X on
// `out` when `xflip`. Nodes are listed in emission order.
struct AndNode {
  std::vector<unsigned> inputs;
  unsigned out;
  bool xflip;
};
struct AndPlan {
  std::vector<AndNode> nodes;  // nodes[0] is the step on the ancilla when n >= 3
  unsigned z = 0;              // qubit carrying AND of the remaining controls
};
AndPlan and_plan(unsigned n);

}  // namespace cnx
