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

#include "cnx/bench.hpp"

#include <fmt/format.h>

#include <cmath>
#include <stdexcept>

#include "cnx/approx.hpp"
#include "cnx/sim.hpp"
#include "cnx/su2.hpp"

namespace cnx {

namespace {

const Mat2 kX = (Mat2() << 0, 1, 1, 0).finished();

// e^{-i alpha} U with alpha = arg(det U) / 2
Mat2 su2_part(const Mat2& u) { return std::polar(1., -std::arg(u.determinant()) / 2) * u; }

// max |out - expected| over random product inputs; `zero` qubits start in |0>.
double sampled_distance(const Circuit& c, unsigned n, const std::vector<Mat2>& ws,
                        std::uint64_t zero, bool up_to_phase, std::uint64_t seed) {
  // refuse before allocating 2^n amplitudes
  if (c.n_qubits() > kMaxStateQubits)
    throw SimError(fmt::format("verify: {} qubits exceed the statevector cap of {}", c.n_qubits(),
                               kMaxStateQubits));
  std::mt19937_64 rng(seed);
  double d = 0.;
  for (int trial = 0; trial < 4; ++trial) {
    StateVector<double> s = random_product_state<double>(c.n_qubits(), rng);
    if (zero) {
      for (Eigen::Index i = 0; i < s.size(); ++i)
        if (static_cast<std::uint64_t>(i) & zero) s(i) = 0;
      s.normalize();
    }
    StateVector<double> want = s;
    apply_controlled_oracle(want, n, ws);
    const StateVector<double> got = apply(c, std::move(s));
    std::complex<double> ph = 1;
    if (up_to_phase) {
      const auto ov = want.dot(got);
      if (std::abs(ov) > 0) ph = ov / std::abs(ov);
    }
    d = std::max(d, (got - ph * want).cwiseAbs().maxCoeff());
  }
  return d;
}

Check finish(std::string what, double distance, double tol) {
  return {std::move(what), distance, tol, distance <= tol};
}

}  // namespace

Check check_mcx(unsigned n, AncillaMode mode, double tol, std::uint64_t seed) {
  const bool clean = mode == AncillaMode::clean;
  const Circuit c = mcx_log({n, mode});
  const std::string what = fmt::format("mcx n={} {}", n, clean ? "clean" : "dirty");
  if (c.n_qubits() <= kDenseCheckQubits) {
    const auto u = unitary_of(c);
    const auto b = pad_identity(cnx_oracle(n), 1);
    const EquivMode em{clean ? EquivKind::clean_subspace : EquivKind::tensor_identity, {n + 1}};
    return finish(what, equiv(u, b, em, tol).distance, tol);
  }
  const std::uint64_t anc = std::uint64_t{1} << (n + 1);
  return finish(what, sampled_distance(c, n, {kX}, clean ? anc : 0, !clean, seed), tol);
}

Check check_mcmt_x(unsigned n, unsigned m, double tol, std::uint64_t seed) {
  const Circuit c = mcmt_x(n, m);
  const std::vector<Mat2> ws(m, kX);
  const std::string what = fmt::format("mcmt_x n={} m={}", n, m);
  if (c.n_qubits() <= kDenseCheckQubits) {
    const auto u = unitary_of(c);
    const auto b = pad_identity(controlled_oracle(n, ws), 1);
    return finish(what, equiv(u, b, {EquivKind::clean_subspace, {n + m}}, tol).distance, tol);
  }
  return finish(what, sampled_distance(c, n, ws, std::uint64_t{1} << (n + m), false, seed), tol);
}

Check check_mcmt_su2(unsigned n, const std::vector<Mat2>& ws, double tol, std::uint64_t seed) {
  const Circuit c = mcmt_su2({n, ws});
  const std::string what = fmt::format("mcmt_su2 n={} m={}", n, ws.size());
  if (c.n_qubits() <= kDenseCheckQubits) {
    const auto u = unitary_of(c);
    return finish(what, equiv(u, controlled_oracle(n, ws), {EquivKind::global_phase, {}}, tol).distance,
                  tol);
  }
  return finish(what, sampled_distance(c, n, ws, 0, true, seed), tol);
}

Check check_approx(unsigned n, const Mat2& u, double epsilon) {
  if (n + 1 > kMaxUnitaryQubits)
    throw SimError(fmt::format("check_approx: {} qubits exceed the dense cap of {}", n + 1,
                               kMaxUnitaryQubits));
  const ApproxResult r = approx_mcu(n, u, epsilon);
  auto m = unitary_of(r.circuit);
  undo_controlled_oracle(m, n, {u});
  // distance of the block part plus everything outside it: an upper bound
  const BlockDistance bd = block_spectral_distance(m, n);
  return finish(fmt::format("approx n={} n_b={} eps={}", n, r.params.n_b, epsilon), bd.bound(),
                epsilon);
}

BenchFamily family_from_name(std::string_view s) {
  if (s == "mcx_clean") return BenchFamily::mcx_clean;
  if (s == "mcx_dirty") return BenchFamily::mcx_dirty;
  if (s == "mcmt_x") return BenchFamily::mcmt_x;
  if (s == "mcmt_su2") return BenchFamily::mcmt_su2;
  if (s == "approx_u") return BenchFamily::approx_u;
  throw std::invalid_argument(fmt::format("unknown family '{}'", s));
}

std::string_view family_name(BenchFamily f) {
  switch (f) {
    case BenchFamily::mcx_clean: return "mcx_clean";
    case BenchFamily::mcx_dirty: return "mcx_dirty";
    case BenchFamily::mcmt_x: return "mcmt_x";
    case BenchFamily::mcmt_su2: return "mcmt_su2";
    case BenchFamily::approx_u: return "approx_u";
  }
  return "?";
}

std::vector<unsigned> NRange::values() const {
  if (min == 0 || min > max) throw std::invalid_argument("n range: need 1 <= n-min <= n-max");
  if (step == 0 || (geometric && step < 2)) throw std::invalid_argument("n range: bad step");
  std::vector<unsigned> out;
  for (std::uint64_t n = min; n <= max; n = geometric ? n * step : n + step)
    out.push_back(static_cast<unsigned>(n));
  return out;
}

std::vector<BenchRow> run_family(BenchFamily family, const NRange& range, const BenchParams& params) {
  std::vector<BenchRow> rows;
  for (unsigned n : range.values()) {
    BenchRow row;
    row.family = family;
    row.n = n;
    row.m = params.m;
    DecompReport rep;
    BaselineCounts base;
    switch (family) {
      case BenchFamily::mcx_clean:
      case BenchFamily::mcx_dirty: {
        const bool clean = family == BenchFamily::mcx_clean;
        const AncillaMode mode = clean ? AncillaMode::clean : AncillaMode::dirty;
        row.m = 1;
        rep = report(mcx_log({n, mode}));
        base = baseline_counts(clean ? Baseline::khattar_clean : Baseline::khattar_dirty, n);
        if (params.verify) row.verified = check_mcx(n, mode).pass;
        break;
      }
      case BenchFamily::mcmt_x:
        rep = report(mcmt_x(n, params.m));
        // the clean two-ancilla C^nX behind the same fan-out
        base = baseline_counts(Baseline::khattar_clean, n);
        base.cnot += 2. * (params.m - 1);
        if (params.verify) row.verified = check_mcmt_x(n, params.m).pass;
        break;
      case BenchFamily::mcmt_su2: {
        const std::vector<Mat2> ws(params.m, su2_part(params.gate));
        rep = report(mcmt_su2({n, ws}));
        base = baseline_counts(Baseline::silva_linear_su2, n, params.m);
        if (params.verify) row.verified = check_mcmt_su2(n, ws).pass;
        break;
      }
      case BenchFamily::approx_u: {
        const ApproxResult r = approx_mcu(n, params.gate, params.epsilon);
        rep = r.report;
        row.m = r.params.n_b;
        base = baseline_counts(Baseline::silva_approx, n, r.params.n_b);
        if (params.verify) row.verified = check_approx(n, params.gate, params.epsilon).pass;
        break;
      }
    }
    row.cnot = rep.cnot_count;
    row.depth = rep.depth;
    row.baseline_cnot = base.cnot;
    row.baseline_depth = base.depth;
    rows.push_back(row);
  }
  return rows;
}

LogFit fit_log(const std::vector<BenchRow>& rows) {
  if (rows.size() < 3) throw std::invalid_argument("fit_log: need at least 3 rows");
  const double k = static_cast<double>(rows.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& r : rows) {
    const double x = std::log2(static_cast<double>(r.n)), y = static_cast<double>(r.depth);
    sx += x, sy += y, sxx += x * x, sxy += x * y;
  }
  const double den = k * sxx - sx * sx;
  if (std::abs(den) < 1e-12) throw std::invalid_argument("fit_log: all n are equal");
  LogFit f;
  f.a = (k * sxy - sx * sy) / den;
  f.b = (sy - f.a * sx) / k;
  double ss_res = 0, ss_tot = 0;
  for (const auto& r : rows) {
    const double y = static_cast<double>(r.depth);
    const double e = y - (f.a * std::log2(static_cast<double>(r.n)) + f.b);
    ss_res += e * e;
    ss_tot += (y - sy / k) * (y - sy / k);
  }
  f.r2 = ss_tot > 0 ? 1 - ss_res / ss_tot : (ss_res < 1e-18 ? 1. : 0.);
  return f;
}

void write_csv(std::ostream& os, const std::vector<BenchRow>& rows) {
  os << kCsvHeader << '\n';
  for (const auto& r : rows) {
    os << fmt::format("{},{},{},{},{},{:.4f},", family_name(r.family), r.n, r.m, r.cnot, r.depth,
                      r.baseline_cnot);
    if (r.baseline_depth) os << fmt::format("{:.4f}", *r.baseline_depth);
    os << '\n';
  }
}

}  // namespace cnx
