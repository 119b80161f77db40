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

#include <cmath>
#include <sstream>

#include "cnx/bench.hpp"
#include "cnx/euler.hpp"

using namespace cnx;

namespace {

std::vector<BenchRow> synthetic(const std::vector<unsigned>& ns, auto depth_of) {
  std::vector<BenchRow> rows;
  for (unsigned n : ns) {
    BenchRow r;
    r.n = n;
    r.depth = depth_of(n);
    rows.push_back(r);
  }
  return rows;
}

}  // namespace

TEST_CASE("NRange") {
  CHECK(NRange{8, 32, 2, true}.values() == std::vector<unsigned>{8, 16, 32});
  CHECK(NRange{3, 9, 3, false}.values() == std::vector<unsigned>{3, 6, 9});
  CHECK(NRange{5, 5, 1, false}.values() == std::vector<unsigned>{5});
}

TEST_CASE("mcx_clean rows") {
  const auto rows = run_family(BenchFamily::mcx_clean, {8, 32, 2, true});
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].cnot == 42);
  CHECK(rows[1].cnot == 90);
  CHECK(rows[2].cnot == 186);
  CHECK(rows[1].depth == 108);
  CHECK(rows[0].baseline_cnot == 52.);
  CHECK(rows[0].baseline_depth.has_value());
  CHECK_FALSE(rows[0].verified.has_value());
}

TEST_CASE("mcmt_su2 row against the linear baseline") {
  BenchParams p;
  p.gate = ry(0.7);
  p.verify = true;
  const auto rows = run_family(BenchFamily::mcmt_su2, {6, 6, 1, false}, p);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].cnot <= 50);
  CHECK(rows[0].baseline_cnot == 72.);
  CHECK(rows[0].verified == true);
}

TEST_CASE("approx_u rows step by 24") {
  const auto rows = run_family(BenchFamily::approx_u, {10, 12, 1, false});
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].m == 5);  // n_b
  CHECK(rows[1].cnot - rows[0].cnot == 24);
  CHECK(rows[2].cnot - rows[1].cnot == 24);
}

TEST_CASE("fit_log") {
  const std::vector<unsigned> ns{16, 32, 64, 128};
  auto f = fit_log(synthetic(ns, [](unsigned n) { return std::size_t(10 * std::log2(n)); }));
  CHECK(f.a == doctest::Approx(10));
  CHECK(f.b == doctest::Approx(0).epsilon(1e-9));
  CHECK(f.r2 == doctest::Approx(1));
  f = fit_log(synthetic(ns, [](unsigned) { return std::size_t{7}; }));
  CHECK(f.a == doctest::Approx(0).epsilon(1e-12));
  CHECK(f.b == doctest::Approx(7));
  CHECK_THROWS(fit_log(synthetic({8, 8, 8}, [](unsigned) { return std::size_t{3}; })));
  CHECK_THROWS(fit_log(synthetic({8, 16}, [](unsigned) { return std::size_t{3}; })));
}

TEST_CASE("csv is byte-stable") {
  BenchRow a;
  a.n = 8;
  a.cnot = 42;
  a.depth = 60;
  a.baseline_cnot = 52;
  a.baseline_depth = 59.8273;
  BenchRow b = a;
  b.family = BenchFamily::mcx_dirty;
  b.baseline_depth.reset();
  std::ostringstream os;
  write_csv(os, {a, b});
  CHECK(os.str() ==
        "family,n,m,cnot,depth,baseline_cnot,baseline_depth\n"
        "mcx_clean,8,1,42,60,52.0000,59.8273\n"
        "mcx_dirty,8,1,42,60,52.0000,\n");
}

TEST_CASE("family names round trip") {
  for (auto f : {BenchFamily::mcx_clean, BenchFamily::mcx_dirty, BenchFamily::mcmt_x, BenchFamily::mcmt_su2,
                 BenchFamily::approx_u})
    CHECK(family_from_name(family_name(f)) == f);
  CHECK_THROWS(family_from_name("bogus"));
}

TEST_CASE("property: never above the baseline CNOT count from n = 6") {
  BenchParams p;
  p.m = 3;
  for (auto f : {BenchFamily::mcx_clean, BenchFamily::mcx_dirty, BenchFamily::mcmt_x, BenchFamily::mcmt_su2})
    for (const BenchRow& r : run_family(f, {6, 200, 7, false}, p)) {
      INFO(family_name(f), " n=", r.n);
      CHECK(static_cast<double>(r.cnot) <= r.baseline_cnot);
    }
  for (const BenchRow& r : run_family(BenchFamily::approx_u, {10, 200, 7, false})) {
    INFO("approx_u n=", r.n);
    CHECK(static_cast<double>(r.cnot) <= r.baseline_cnot);
  }
}
