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

// cnxlog: synthesize, verify, benchmark and export multi-controlled gates.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <fmt/core.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "cnx/approx.hpp"
#include "cnx/bench.hpp"
#include "cnx/circuit.hpp"
#include "cnx/euler.hpp"
#include "cnx/mcx.hpp"
#include "cnx/sim.hpp"
#include "cnx/su2.hpp"

namespace {

using namespace cnx;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "pi", "-pi/2", "3*pi/4", "0.25", "2pi": a signed product/quotient of factors.
double parse_angle(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }),
          s.end());
  if (s.empty()) throw UsageError("empty angle");
  std::size_t i = 0;
  double sign = 1;
  if (s[0] == '-' || s[0] == '+') sign = s[i++] == '-' ? -1 : 1;
  double v = 1;
  char op = '*';
  while (i < s.size()) {
    double f;
    if (s.compare(i, 2, "pi") == 0) {
      f = std::numbers::pi;
      i += 2;
    } else {
      std::size_t used = 0;
      try {
        f = std::stod(s.substr(i), &used);
      } catch (const std::exception&) {
        throw UsageError(fmt::format("bad angle '{}'", s));
      }
      i += used;
    }
    v = op == '*' ? v * f : v / f;
    if (i == s.size()) break;
    if (s[i] == '*' || s[i] == '/') {
      op = s[i++];
    } else if (s.compare(i, 2, "pi") == 0) {
      op = '*';  // implicit product, as in "2pi"
    } else {
      throw UsageError(fmt::format("bad angle '{}'", s));
    }
  }
  return sign * v;
}

Mat2 parse_gate(const std::string& spec) {
  std::string s = spec;
  if (!s.empty() && s.front() == '[') return parse_matrix_json(s);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return std::tolower(ch); });
  const std::complex<double> I(0, 1);
  Mat2 m;
  if (s == "x") return (m << 0, 1, 1, 0).finished();
  if (s == "y") return (m << 0, -I, I, 0).finished();
  if (s == "z") return (m << 1, 0, 0, -1).finished();
  if (s == "s") return (m << 1, 0, 0, I).finished();
  if (s == "t") return (m << 1, 0, 0, std::polar(1., std::numbers::pi / 4)).finished();
  if (s == "h") return (m << 1, 1, 1, -1).finished() / std::sqrt(2.);
  for (const char* r : {"rx", "ry", "rz"}) {
    if (s.rfind(std::string(r) + "(", 0) == 0 && s.back() == ')') {
      const double a = parse_angle(s.substr(3, s.size() - 4));
      return r[1] == 'x' ? rx(a) : r[1] == 'y' ? ry(a) : rz(a);
    }
  }
  throw UsageError(fmt::format("unknown gate '{}' (x, y, z, s, t, h, rx(a), ry(a), rz(a) or a JSON matrix)", spec));
}

std::string_view role_name(AncillaRole r) {
  switch (r) {
    case AncillaRole::clean: return "clean";
    case AncillaRole::dirty: return "dirty";
    default: return "none";
  }
}

void print_report(const DecompReport& r) {
  std::cerr << fmt::format("cnot={} gates={} depth={} ancilla={} ancilla_kind={}\n", r.cnot_count,
                           r.total_gates, r.depth, r.num_ancilla, role_name(r.ancilla_kind));
}

void emit(const Circuit& c, TextFormat f) {
  // the assembly dialects take the lowered gate set; JSON keeps macros
  std::cout << export_text(f == TextFormat::json ? c : lower(c), f);
}

struct SynthArgs {
  unsigned controls = 0;
  unsigned targets = 1;
  std::string ancilla = "clean";
  std::string gate;
  double epsilon = 0.1;
  std::string format = "qasm3";
};

AncillaMode mode_of(const std::string& s) {
  if (s == "clean") return AncillaMode::clean;
  if (s == "dirty") return AncillaMode::dirty;
  throw UsageError(fmt::format("--ancilla must be clean or dirty, got '{}'", s));
}

Mat2 su2_gate(const std::string& spec) {
  const Mat2 w = parse_gate(spec);
  if (!is_su2(w, 1e-9))
    throw UsageError(fmt::format("gate '{}' is not in SU(2); try e.g. rx(pi) instead of x", spec));
  return w;
}

enum class Kind { mcx, mcmt_x, mcmt_su2, approx_u };

int run_synth(Kind k, const SynthArgs& a) {
  const TextFormat f = format_from_name(a.format);
  switch (k) {
    case Kind::mcx: {
      const Circuit c = mcx_log({a.controls, mode_of(a.ancilla)});
      emit(c, f);
      print_report(report(c));
      return 0;
    }
    case Kind::mcmt_x: {
      const Circuit c = mcmt_x(a.controls, a.targets);
      emit(c, f);
      print_report(report(c));
      return 0;
    }
    case Kind::mcmt_su2: {
      const Circuit c = mcmt_su2({a.controls, std::vector<Mat2>(a.targets, su2_gate(a.gate))});
      emit(c, f);
      print_report(report(c));
      return 0;
    }
    case Kind::approx_u: {
      const ApproxResult r = approx_mcu(a.controls, parse_gate(a.gate), a.epsilon);
      emit(r.circuit, f);
      print_report(r.report);
      std::cerr << fmt::format("epsilon={} theta={:.6f} alpha={:.6f} n_b={} n_e={}\n",
                               r.params.epsilon, r.params.theta, r.params.alpha, r.params.n_b,
                               r.params.n_e);
      return 0;
    }
  }
  return 2;
}

int run_verify(Kind k, const SynthArgs& a) {
  Check c;
  switch (k) {
    case Kind::mcx:
      c = check_mcx(a.controls, mode_of(a.ancilla));
      break;
    case Kind::mcmt_x:
      c = check_mcmt_x(a.controls, a.targets);
      break;
    case Kind::mcmt_su2:
      c = check_mcmt_su2(a.controls, std::vector<Mat2>(a.targets, su2_gate(a.gate)));
      break;
    case Kind::approx_u:
      c = check_approx(a.controls, parse_gate(a.gate), a.epsilon);
      break;
  }
  std::cout << fmt::format("{} {} distance={:.3e} tol={:.3e}\n", c.pass ? "PASS" : "FAIL", c.what,
                           c.distance, c.tol);
  return c.pass ? 0 : 1;
}

struct BenchArgs {
  std::string family;
  unsigned n_min = 0, n_max = 0;
  std::string step = "1";
  unsigned m = 1;
  std::string gate = "x";
  double epsilon = 0.1;
  bool verify = false;
  bool fit = false;
  std::string out;
};

int run_bench(const BenchArgs& a) {
  NRange range{a.n_min, a.n_max, 1, false};
  std::string step = a.step;
  if (!step.empty() && step[0] == 'x') {
    range.geometric = true;
    step.erase(0, 1);
  }
  try {
    range.step = static_cast<unsigned>(std::stoul(step));
  } catch (const std::exception&) {
    throw UsageError(fmt::format("--step must be N or xN, got '{}'", a.step));
  }
  BenchParams p;
  p.m = a.m;
  p.gate = parse_gate(a.gate);
  p.epsilon = a.epsilon;
  p.verify = a.verify;
  const auto rows = run_family(family_from_name(a.family), range, p);
  if (a.out.empty()) {
    write_csv(std::cout, rows);
  } else {
    std::ofstream os(a.out);
    if (!os) throw UsageError(fmt::format("cannot write '{}'", a.out));
    write_csv(os, rows);
  }
  if (a.fit) {
    const LogFit fl = fit_log(rows);
    std::cerr << fmt::format("fit depth = {:.4f} * log2(n) + {:.4f}, r2 = {:.4f}\n", fl.a, fl.b, fl.r2);
  }
  const bool ok = std::all_of(rows.begin(), rows.end(), [](const BenchRow& r) { return r.verified.value_or(true); });
  if (!ok) std::cerr << "verification failed for at least one row\n";
  return ok ? 0 : 1;
}

int run_export(const std::string& in, const std::string& format) {
  std::stringstream ss;
  if (in == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream is(in);
    if (!is) throw UsageError(fmt::format("cannot read '{}'", in));
    ss << is.rdbuf();
  }
  const Circuit c = parse_json(ss.str());
  emit(c, format_from_name(format));
  print_report(report(c));
  return 0;
}

void add_kind_commands(CLI::App* parent, SynthArgs& a, Kind& kind) {
  auto common = [&](CLI::App* s) {
    s->add_option("--controls", a.controls, "number of controls")->required()->check(CLI::PositiveNumber);
  };
  auto* mcx = parent->add_subcommand("mcx", "multi-controlled X with one ancilla");
  common(mcx);
  mcx->add_option("--ancilla", a.ancilla, "clean or dirty")->check(CLI::IsMember({"clean", "dirty"}));
  mcx->callback([&] { kind = Kind::mcx; });

  auto* mx = parent->add_subcommand("mcmt-x", "multi-controlled multi-target X, one clean ancilla");
  common(mx);
  mx->add_option("--targets", a.targets, "number of targets")->check(CLI::PositiveNumber);
  mx->callback([&] { kind = Kind::mcmt_x; });

  auto* ms = parent->add_subcommand("mcmt-su2", "multi-controlled multi-target SU(2), no ancilla");
  common(ms);
  ms->add_option("--targets", a.targets, "number of targets")->check(CLI::PositiveNumber);
  ms->add_option("--gate", a.gate, "target gate (SU(2))")->required();
  ms->callback([&] { kind = Kind::mcmt_su2; });

  auto* au = parent->add_subcommand("approx-u", "approximate multi-controlled U(2), no ancilla");
  common(au);
  au->add_option("--gate", a.gate, "target gate")->required();
  au->add_option("--epsilon", a.epsilon, "spectral-norm error budget");
  au->callback([&] { kind = Kind::approx_u; });

  parent->require_subcommand(1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Log-depth multi-controlled gate synthesis"};
  app.require_subcommand(1);

  SynthArgs sa;
  Kind kind = Kind::mcx;

  auto* synth = app.add_subcommand("synth", "emit a circuit, report to stderr");
  synth->add_option("--format", sa.format, "qasm2, qasm3 or json")->check(CLI::IsMember({"qasm2", "qasm3", "json"}));
  synth->fallthrough();  // --format may follow the kind
  add_kind_commands(synth, sa, kind);

  auto* verify = app.add_subcommand("verify", "synthesize and check against the dense oracle");
  add_kind_commands(verify, sa, kind);

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "CNOT and depth table as CSV");
  bench->add_option("--family", ba.family, "mcx_clean, mcx_dirty, mcmt_x, mcmt_su2, approx_u")->required();
  bench->add_option("--n-min", ba.n_min)->required();
  bench->add_option("--n-max", ba.n_max)->required();
  bench->add_option("--step", ba.step, "additive N, or xN to multiply");
  bench->add_option("--m", ba.m, "targets (mcmt families)");
  bench->add_option("--gate", ba.gate, "target gate (mcmt_su2, approx_u)");
  bench->add_option("--epsilon", ba.epsilon, "error budget (approx_u)");
  bench->add_flag("--verify", ba.verify, "run the oracle check per row");
  bench->add_flag("--fit", ba.fit, "print a log2 fit of depth to stderr");
  bench->add_option("--out", ba.out, "CSV path (default: stdout)");

  std::string ex_in, ex_format = "qasm3";
  auto* exp = app.add_subcommand("export", "convert a JSON circuit");
  exp->add_option("input", ex_in, "JSON file, or - for stdin")->required();
  exp->add_option("--format", ex_format)->check(CLI::IsMember({"qasm2", "qasm3", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*synth) return run_synth(kind, sa);
    if (*verify) return run_verify(kind, sa);
    if (*bench) return run_bench(ba);
    if (*exp) return run_export(ex_in, ex_format);
  } catch (const std::exception& e) {
    // bad parameters of every kind: unreachable sizes, non-SU(2) input, n below n_b + 5, ...
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
