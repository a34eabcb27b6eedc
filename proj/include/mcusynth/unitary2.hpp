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

#pragma once

#include <array>
#include <complex>
#include <cstdint>

namespace mcusynth {

using Complex = std::complex<double>;

/// Max-entry deviation of U U^dagger from I accepted for a Unitary2.
inline constexpr double kUnitaryTolerance = 1e-12;

/// A 2x2 complex unitary matrix, stored row-major.
class Unitary2 {
 public:
  using Entries = std::array<Complex, 4>;

  /// Identity.
  Unitary2();

  /// Validates unitarity (max-entry |U U^dagger - I| and ||det| - 1| within
  /// `tol`); throws std::invalid_argument otherwise.
  static Unitary2 from_entries(const Entries& entries, double tol = kUnitaryTolerance);
  static Unitary2 from_entries(Complex a, Complex b, Complex c, Complex d, double tol = kUnitaryTolerance);

  static Unitary2 identity();
  static Unitary2 pauli_x();
  static Unitary2 pauli_y();
  static Unitary2 pauli_z();
  static Unitary2 hadamard();
  static Unitary2 phase_s();
  static Unitary2 phase_t();

  [[nodiscard]] const Complex& operator()(int row, int col) const { return m_[row * 2 + col]; }
  [[nodiscard]] const Entries& entries() const { return m_; }
  [[nodiscard]] Complex determinant() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

  /// Exact entrywise equality.
  friend bool operator==(const Unitary2&, const Unitary2&) = default;

  friend Unitary2 operator*(const Unitary2& a, const Unitary2& b);
  friend Unitary2 dagger(const Unitary2& a);
  friend Unitary2 unitary_root(const Unitary2& u, int k);

 private:
  explicit Unitary2(const Entries& entries) : m_(entries) {}

  Entries m_;
};

/// Max-entry deviation of M M^dagger from I, together with ||det M| - 1|;
/// returns the larger of the two.
double unitarity_error(const Unitary2::Entries& m);

bool is_unitary(const Unitary2::Entries& m, double tol = kUnitaryTolerance);

/// max_{ij} |a_ij - b_ij|
double max_entry_distance(const Unitary2& a, const Unitary2& b);

inline Unitary2 multiply(const Unitary2& a, const Unitary2& b) { return a * b; }

/// a^e by repeated squaring; negative exponents use the adjoint.
Unitary2 power(const Unitary2& a, std::int64_t e);

/// A V with V^(2^k) = u, using principal-branch eigenphases in (-pi, pi].
/// k = 0 returns u unchanged; scalar matrices skip the eigenvector path.
/// Throws std::invalid_argument for k < 0 or if u has drifted off the
/// unitary group by more than 1e-9.
Unitary2 unitary_root(const Unitary2& u, int k);

}  // namespace mcusynth
