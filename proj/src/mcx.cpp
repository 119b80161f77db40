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

#include "cnx/mcx.hpp"

#include <algorithm>
#include <set>

namespace cnx {

namespace {

using K = GateKind;

Mat2 mat(K k) { return single_qubit_matrix(Gate{k, {0}}); }

// X, H, T in time order, and Tdg, H.
const Mat2& dress_in() {
  static const Mat2 m = mat(K::T) * mat(K::H) * mat(K::X);
  return m;
}
const Mat2& dress_out() {
  static const Mat2 m = mat(K::H) * mat(K::Tdg);
  return m;
}

void ladder_block(Circuit& c, unsigned c1, unsigned c2, unsigned t) {
  c.add(make_u2(dress_in(), t));
  c.add(K::CX, {c2, t});
  c.add(K::Tdg, {t});
  c.add(K::CX, {c1, t});
  c.add(K::T, {t});
  c.add(K::CX, {c2, t});
  c.add(make_u2(dress_out(), t));
}

// Three-control Toffoli up to a diagonal, 6 CX, with the X on the target
// folded into the first single-qubit gate.
void rc3x_block(Circuit& c, unsigned a, unsigned b, unsigned d, unsigned t) {
  c.add(make_u2(dress_in(), t));
  c.add(K::CX, {d, t});
  c.add(K::Tdg, {t});
  c.add(K::H, {t});
  c.add(K::CX, {a, t});
  c.add(K::T, {t});
  c.add(K::CX, {b, t});
  c.add(K::Tdg, {t});
  c.add(K::CX, {a, t});
  c.add(K::T, {t});
  c.add(K::CX, {b, t});
  c.add(K::Tdg, {t});
  c.add(K::H, {t});
  c.add(K::T, {t});
  c.add(K::CX, {d, t});
  c.add(make_u2(dress_out(), t));
}

void emit(Circuit& c, const AndNode& nd) {
  const auto& in = nd.inputs;
  if (!nd.xflip)
    c.add(K::RCCX, {in[0], in[1], nd.out});
  else if (in.size() == 2)
    ladder_block(c, in[0], in[1], nd.out);
  else
    rc3x_block(c, in[0], in[1], in[2], nd.out);
}

// Incremental ASAP levels, so workspace choices follow the real depth.
struct Levels {
  std::vector<std::size_t> lvl;
  explicit Levels(unsigned n) : lvl(n, 0) {}
  void add(const Gate& g) {
    std::size_t l = 0;
    for (unsigned q : g.qubits) l = std::max(l, lvl[q]);
    for (unsigned q : g.qubits) lvl[q] = l + 1;
  }
};

struct Root {
  unsigned q;
};

struct Planner {
  unsigned width;
  Levels lv;
  std::vector<AndNode> nodes;

  explicit Planner(unsigned w) : width(w), lv(w) {}

  std::size_t ready(unsigned q) const { return lv.lvl[q]; }

  AndNode node(unsigned a, unsigned b, unsigned out) const {
    // the earlier-ready input takes the first and last CX
    if (ready(a) < ready(b)) std::swap(a, b);
    return {{a, b}, out, true};
  }

  void place(AndNode nd) {
    Circuit c(width);
    emit(c, nd);
    for (const Gate& g : c.gates()) lv.add(g);
    nodes.push_back(std::move(nd));
  }

  // Balanced tree over `leaves`; each node takes the earliest-ready free
  // qubit of `pool`, and its own inputs are freed for later blocks.
  Root tree(const unsigned* leaves, std::size_t count, std::vector<unsigned>& pool,
            std::vector<unsigned>& freed) {
    if (count == 1) return {leaves[0]};
    const std::size_t h = (count + 1) / 2;
    const Root l = tree(leaves, h, pool, freed);
    const Root r = tree(leaves + h, count - h, pool, freed);
    // finishing time is monotone in the workspace's own level
    auto best = std::min_element(pool.begin(), pool.end(),
                                 [&](unsigned x, unsigned y) { return ready(x) < ready(y); });
    const unsigned f = *best;
    pool.erase(best);
    place(node(l.q, r.q, f));
    freed.push_back(l.q);
    freed.push_back(r.q);
    return {f};
  }
};

}  // namespace

// Correctness rests on a certification order: a node may write into a
// control freed by an earlier node only if that node is guaranteed to have
// fired whenever the final AND is 1, without depending (transitively) on
// the node itself. Blocks only borrow from lower-indexed blocks, and block
// roots are folded by a chain whose k-th link borrows from blocks < k.
AndPlan and_plan(unsigned n) {
  AndPlan p;
  if (n < 3) return p;
  const unsigned anc = n + 1;
  Planner pl(n + 2);
  pl.place({{0, 1}, anc, false});
  if (n == 3) {
    p.z = 2;
  } else if (n == 4) {
    pl.place(pl.node(2, 3, 0));
    p.z = 0;
  } else {
    std::vector<unsigned> leaves;
    for (unsigned q = 2; q < n; ++q) leaves.push_back(q);
    // first block: one 3-input node, freeing three controls
    pl.place({{leaves[0], leaves[1], leaves[2]}, 1, true});
    std::vector<unsigned> pool{leaves[0], leaves[1], leaves[2]};
    std::vector<Root> roots{{1}};
    std::vector<unsigned> reserved;
    std::size_t pos = 3;
    auto by_ready = [&](unsigned x, unsigned y) { return pl.ready(x) < pl.ready(y); };
    while (pos < leaves.size()) {
      const std::size_t rest = leaves.size() - pos;
      std::stable_sort(pool.begin(), pool.end(), by_ready);
      std::size_t b;
      if (rest - 1 <= pool.size()) {
        b = rest - 1;
      } else {
        reserved.push_back(pool.back());
        pool.pop_back();
        b = pool.size();
      }
      std::vector<unsigned> unit_pool(pool.begin(), pool.begin() + b), freed;
      pool.erase(pool.begin(), pool.begin() + b);
      roots.push_back(pl.tree(leaves.data() + pos, b + 1, unit_pool, freed));
      pos += b + 1;
      pool.insert(pool.end(), freed.begin(), freed.end());
    }
    Root cur = roots.back();
    for (std::size_t j = roots.size() - 1; j-- > 0;) {
      const unsigned f = j == 0 ? 0 : reserved[j - 1];
      pl.place(pl.node(roots[j].q, cur.q, f));
      cur = {f};
    }
    p.z = cur.q;
  }
  p.nodes = std::move(pl.nodes);
  return p;
}

Circuit rccx() { return Circuit(3).add(GateKind::RCCX, {0, 1, 2}); }

Circuit toffoli_ladder(const std::vector<LadderBlock>& blocks, unsigned n_qubits) {
  std::set<unsigned> targets;
  unsigned hi = 0;
  for (const auto& b : blocks) {
    if (!targets.insert(b.target).second) throw CircuitError("ladder: repeated target");
    hi = std::max({hi, b.c1 + 1, b.c2 + 1, b.target + 1});
  }
  Circuit c(std::max(n_qubits, hi));
  for (const auto& b : blocks) ladder_block(c, b.c1, b.c2, b.target);
  return c;
}

void append_mcx(Circuit& c, const std::vector<unsigned>& controls, unsigned target,
                unsigned anc, AncillaMode mode) {
  const auto n = static_cast<unsigned>(controls.size());
  if (n == 0) {
    c.add(K::X, {target});
    return;
  }
  if (n == 1) {
    c.add(K::CX, {controls[0], target});
    return;
  }
  if (n == 2) {
    c.add(K::CCX, {controls[0], controls[1], target});
    return;
  }
  const AndPlan p = and_plan(n);
  std::vector<unsigned> wires = controls;
  wires.push_back(target);
  wires.push_back(anc);

  Circuit s1(n + 2), tree(n + 2), core(n + 2);
  emit(s1, p.nodes[0]);
  for (std::size_t i = 1; i < p.nodes.size(); ++i) emit(tree, p.nodes[i]);
  core.add(K::CCX, {n + 1, p.z, n});

  const Circuit g = compose(compose(tree, core), inverse(tree));
  Circuit all(n + 2);
  all.append(s1);
  all.append(g);
  all.append(inverse(s1));
  if (mode == AncillaMode::dirty) all.append(g);
  c.append(all, wires);
}

Circuit mcx_log(const McxSpec& spec) {
  if (spec.n < 1) throw CircuitError("mcx_log: need at least one control");
  Circuit c(spec.n + 2);
  c.set_role(spec.n + 1,
             spec.mode == AncillaMode::clean ? AncillaRole::clean : AncillaRole::dirty);
  std::vector<unsigned> controls(spec.n);
  for (unsigned i = 0; i < spec.n; ++i) controls[i] = i;
  append_mcx(c, controls, spec.n, spec.n + 1, spec.mode);
  return c;
}

}  // namespace cnx
