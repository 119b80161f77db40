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

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "cnx/circuit.hpp"
#include "cnx/mcx.hpp"

namespace cnx {

// ---- oracle checks, shared by the CLI and the tests ----

struct Check {
  std::string what;
  double distance = 0.;
  double tol = 0.;
  bool pass = false;
};

// Dense unitary up to kDenseCheckQubits, random product states above
// (up to the state-vector cap).
inline constexpr unsigned kDenseCheckQubits = 11;

Check check_mcx(unsigned n, AncillaMode mode, double tol = 1e-9, std::uint64_t seed = 1);
Check check_mcmt_x(unsigned n, unsigned m, double tol = 1e-9, std::uint64_t seed = 1);
Check check_mcmt_su2(unsigned n, const std::vector<Mat2>& ws, double tol = 1e-9,
                     std::uint64_t seed = 1);
// Spectral error (up to global phase) of approx_mcu against C^n U; passes at <= epsilon.
Check check_approx(unsigned n, const Mat2& u, double epsilon);

// ---- scaling runs ----

enum class BenchFamily { mcx_clean, mcx_dirty, mcmt_x, mcmt_su2, approx_u };

BenchFamily family_from_name(std::string_view s);
std::string_view family_name(BenchFamily f);

struct BenchRow {
  BenchFamily family = BenchFamily::mcx_clean;
  unsigned n = 0;
  unsigned m = 1;
  std::size_t cnot = 0;
  std::size_t depth = 0;
  double baseline_cnot = 0.;
  std::optional<double> baseline_depth;
  std::optional<bool> verified;  // set when verification was requested
};

struct NRange {
  unsigned min = 1, max = 1, step = 1;
  bool geometric = false;  // multiply by `step` instead of adding
  std::vector<unsigned> values() const;
};

struct BenchParams {
  unsigned m = 1;
  Mat2 gate = (Mat2() << 0, 1, 1, 0).finished();  // mcmt_su2 takes its SU(2) part
  double epsilon = 0.1;
  bool verify = false;
};

std::vector<BenchRow> run_family(BenchFamily family, const NRange& range, const BenchParams& params = {});

struct LogFit {
  double a = 0., b = 0., r2 = 0.;
};

// Least squares depth ≈ a log2(n) + b.
LogFit fit_log(const std::vector<BenchRow>& rows);

inline constexpr std::string_view kCsvHeader = "family,n,m,cnot,depth,baseline_cnot,baseline_depth";

void write_csv(std::ostream& os, const std::vector<BenchRow>& rows);

}  // namespace cnx
