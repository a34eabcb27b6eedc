// Copyright 2026 The mcusynth Authors
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

#include "mcusynth/unitary2.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mcusynth {
namespace {

constexpr Complex kI{0.0, 1.0};

// Off-diagonal and diagonal-spread threshold below which u is treated as a
// multiple of the identity.
constexpr double kScalarTolerance = 1e-14;

// Roots are only taken of matrices that are unitary to this tolerance.
constexpr double kRootInputTolerance = 1e-9;

double principal_phase(Complex z) {
  const double theta = std::arg(z);
  return theta <= -std::numbers::pi ? std::numbers::pi : theta;
}

}  // namespace

Unitary2::Unitary2() : m_{Complex{1.0}, Complex{0.0}, Complex{0.0}, Complex{1.0}} {}

Unitary2 Unitary2::from_entries(const Entries& entries, double tol) {
  const double err = unitarity_error(entries);
  if (!(err <= tol)) {
    throw std::invalid_argument("matrix is not unitary (deviation " + std::to_string(err) + ")");
  }
  return Unitary2(entries);
}

Unitary2 Unitary2::from_entries(Complex a, Complex b, Complex c, Complex d, double tol) {
  return from_entries(Entries{a, b, c, d}, tol);
}

Unitary2 Unitary2::identity() { return Unitary2(); }

Unitary2 Unitary2::pauli_x() { return Unitary2(Entries{0.0, 1.0, 1.0, 0.0}); }

Unitary2 Unitary2::pauli_y() { return Unitary2(Entries{0.0, -kI, kI, 0.0}); }

Unitary2 Unitary2::pauli_z() { return Unitary2(Entries{1.0, 0.0, 0.0, -1.0}); }

Unitary2 Unitary2::hadamard() {
  const double h = std::numbers::sqrt2 / 2.0;
  return Unitary2(Entries{h, h, h, -h});
}

Unitary2 Unitary2::phase_s() { return Unitary2(Entries{1.0, 0.0, 0.0, kI}); }

Unitary2 Unitary2::phase_t() {
  return Unitary2(Entries{1.0, 0.0, 0.0, std::polar(1.0, std::numbers::pi / 4.0)});
}

Unitary2 operator*(const Unitary2& a, const Unitary2& b) {
  const auto& x = a.m_;
  const auto& y = b.m_;
  return Unitary2(Unitary2::Entries{x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
                                    x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]});
}

Unitary2 dagger(const Unitary2& a) {
  const auto& x = a.m_;
  return Unitary2(Unitary2::Entries{std::conj(x[0]), std::conj(x[2]), std::conj(x[1]), std::conj(x[3])});
}

double unitarity_error(const Unitary2::Entries& m) {
  // (M M^dagger)_{ij} = sum_k M_ik conj(M_jk)
  double err = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const Complex v = m[i * 2] * std::conj(m[j * 2]) + m[i * 2 + 1] * std::conj(m[j * 2 + 1]);
      err = std::max(err, std::abs(v - (i == j ? 1.0 : 0.0)));
    }
  }
  const double det_err = std::abs(std::abs(m[0] * m[3] - m[1] * m[2]) - 1.0);
  return std::max(err, det_err);
}

bool is_unitary(const Unitary2::Entries& m, double tol) { return unitarity_error(m) <= tol; }

double max_entry_distance(const Unitary2& a, const Unitary2& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < 4; ++i) d = std::max(d, std::abs(a.entries()[i] - b.entries()[i]));
  return d;
}

Unitary2 power(const Unitary2& a, std::int64_t e) {
  Unitary2 base = e < 0 ? dagger(a) : a;
  // Negate as unsigned so INT64_MIN is handled.
  std::uint64_t remaining = e < 0 ? ~static_cast<std::uint64_t>(e) + 1 : static_cast<std::uint64_t>(e);
  Unitary2 result;
  while (remaining != 0) {
    if (remaining & 1U) result = result * base;
    remaining >>= 1;
    if (remaining != 0) base = base * base;
  }
  return result;
}

Unitary2 unitary_root(const Unitary2& u, int k) {
  if (k < 0) throw std::invalid_argument("unitary_root: k must be >= 0");
  if (k == 0) return u;
  if (!is_unitary(u.entries(), kRootInputTolerance)) {
    throw std::invalid_argument("unitary_root: input is not unitary");
  }
  const Complex a = u(0, 0), b = u(0, 1), c = u(1, 0), d = u(1, 1);

  if (std::abs(b) <= kScalarTolerance && std::abs(c) <= kScalarTolerance && std::abs(a - d) <= kScalarTolerance) {
    const Complex f = std::polar(1.0, std::ldexp(principal_phase((a + d) / 2.0), -k));
    return Unitary2(Unitary2::Entries{f, 0.0, 0.0, f});
  }

  // Characteristic polynomial t^2 - tr t + det: t = tr/2 +- sqrt(((a-d)/2)^2 + bc).
  const Complex half_trace = (a + d) / 2.0;
  const Complex half_diff = (a - d) / 2.0;
  const Complex s = std::sqrt(half_diff * half_diff + b * c);
  Complex lambda1 = half_trace + s;
  Complex lambda2 = half_trace - s;
  double theta1 = principal_phase(lambda1);
  double theta2 = principal_phase(lambda2);
  if (theta2 < theta1) {
    std::swap(lambda1, lambda2);
    std::swap(theta1, theta2);
  }

  // Eigenvector of lambda1 from whichever row of (u - lambda1 I) is better conditioned.
  Complex v0 = b, v1 = lambda1 - a;
  const Complex w0 = lambda1 - d, w1 = c;
  if (std::norm(w0) + std::norm(w1) > std::norm(v0) + std::norm(v1)) {
    v0 = w0;
    v1 = w1;
  }
  const double len = std::sqrt(std::norm(v0) + std::norm(v1));
  v0 /= len;
  v1 /= len;

  // V = f1 P + f2 (I - P) with P = v v^dagger.
  const Complex f1 = std::polar(1.0, std::ldexp(theta1, -k));
  const Complex f2 = std::polar(1.0, std::ldexp(theta2, -k));
  const Complex p00 = std::norm(v0), p01 = v0 * std::conj(v1), p10 = v1 * std::conj(v0), p11 = std::norm(v1);
  const Complex diff = f1 - f2;
  return Unitary2(Unitary2::Entries{f2 + diff * p00, diff * p01, diff * p10, f2 + diff * p11});
}

}  // namespace mcusynth
