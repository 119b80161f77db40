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
#include <cmath>
#include <complex>

namespace cnx {

template <typename Scalar = double>
Eigen::Matrix<std::complex<Scalar>, 2, 2> rz(Scalar t) {
  Eigen::Matrix<std::complex<Scalar>, 2, 2> m;
  m << std::polar(Scalar(1), -t / 2), 0, 0, std::polar(Scalar(1), t / 2);
  return m;
}

template <typename Scalar = double>
Eigen::Matrix<std::complex<Scalar>, 2, 2> ry(Scalar t) {
  Eigen::Matrix<std::complex<Scalar>, 2, 2> m;
  m << std::cos(t / 2), -std::sin(t / 2), std::sin(t / 2), std::cos(t / 2);
  return m;
}

template <typename Scalar = double>
Eigen::Matrix<std::complex<Scalar>, 2, 2> rx(Scalar t) {
  const std::complex<Scalar> s(0, -std::sin(t / 2));
  Eigen::Matrix<std::complex<Scalar>, 2, 2> m;
  m << std::cos(t / 2), s, s, std::cos(t / 2);
  return m;
}

// u = e^{i phase} Rz(beta) Ry(gamma) Rz(delta)
struct ZYZ {
  double phase, beta, gamma, delta;
};

// u = e^{i phase} U3(theta, phi, lambda), U3 as in the usual assembly dialects
struct U3Angles {
  double phase, theta, phi, lambda;
};

template <typename Derived>
U3Angles u3_angles(const Eigen::MatrixBase<Derived>& u) {
  using std::abs, std::arg, std::atan2;
  const auto a = u(0, 0), b = u(0, 1), c = u(1, 0), d = u(1, 1);
  U3Angles r{};
  r.theta = 2 * atan2(abs(c), abs(a));
  if (abs(a) > 1e-12) {
    r.phase = arg(a);
    r.phi = abs(c) > 1e-12 ? arg(c) - r.phase : 0.;
    r.lambda = abs(c) > 1e-12 ? arg(-b) - r.phase : arg(d) - r.phase - r.phi;
  } else {
    r.phase = arg(c);
    r.phi = 0.;
    r.lambda = arg(-b) - r.phase;
  }
  return r;
}

// U3(t,p,l) = e^{i(p+l)/2} Rz(p) Ry(t) Rz(l)
template <typename Derived>
ZYZ zyz(const Eigen::MatrixBase<Derived>& u) {
  const U3Angles a = u3_angles(u);
  return {a.phase + (a.phi + a.lambda) / 2, a.phi, a.theta, a.lambda};
}

}  // namespace cnx
