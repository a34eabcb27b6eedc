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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mcusynth/circuit.hpp"
#include "mcusynth/unitary2.hpp"

namespace mcusynth {

/// Default largest width for which a dense operator is built.
inline constexpr Qubit kDefaultMaxDenseWidth = 12;

/// Amplitudes over the 2^m computational basis states. The basis index is
/// sum_i x_i 2^(m-1-i), so qubit 0 is the most significant bit.
class StateVector {
 public:
  /// |0...0>
  explicit StateVector(Qubit width);
  StateVector(Qubit width, std::vector<Complex> amplitudes);

  static StateVector basis(Qubit width, std::uint64_t index);
  /// "0110" -> |0110>; qubit 0 is the first character.
  static StateVector from_bitstring(std::string_view bits);

  [[nodiscard]] Qubit width() const { return width_; }
  [[nodiscard]] std::size_t dimension() const { return amps_.size(); }
  [[nodiscard]] std::span<const Complex> amplitudes() const { return amps_; }
  [[nodiscard]] std::span<Complex> amplitudes() { return amps_; }
  [[nodiscard]] const Complex& operator[](std::size_t i) const { return amps_[i]; }
  [[nodiscard]] double norm() const;

 private:
  Qubit width_;
  std::vector<Complex> amps_;
};

/// Row-major 2^m x 2^m complex matrix.
class DenseOperator {
 public:
  /// Identity of the given width.
  explicit DenseOperator(Qubit width);

  [[nodiscard]] Qubit width() const { return width_; }
  [[nodiscard]] std::size_t dimension() const { return dim_; }
  [[nodiscard]] Complex& at(std::size_t row, std::size_t col) { return m_[row * dim_ + col]; }
  [[nodiscard]] const Complex& at(std::size_t row, std::size_t col) const { return m_[row * dim_ + col]; }

  [[nodiscard]] StateVector apply(const StateVector& s) const;

 private:
  Qubit width_;
  std::size_t dim_;
  std::vector<Complex> m_;
};

/// Bit mask of qubit `q` within a basis index of width `width`.
constexpr std::uint64_t qubit_mask(Qubit width, Qubit q) { return std::uint64_t{1} << (width - 1 - q); }

/// Applies g in place. `v` is the matrix bound to CV; CVdg applies its
/// adjoint. Throws std::invalid_argument if g needs v and none is given,
/// std::out_of_range if g does not fit the state.
void apply_gate(StateVector& s, const Gate& g, const std::optional<Unitary2>& v);

/// Runs every gate of c on s, using c's V binding.
StateVector run(const Circuit& c, StateVector s);

/// Column j is the circuit applied to basis state j. Throws std::length_error
/// above max_width and std::invalid_argument for a missing V binding.
DenseOperator circuit_unitary(const Circuit& c, Qubit max_width = kDefaultMaxDenseWidth);

/// The n-controlled u on n+1 qubits (controls 0..n-1, target n), built from
/// its definition: identity except the 2x2 block on the two basis states
/// whose controls are all 1.
DenseOperator reference_mcu(int n, const Unitary2& u, Qubit max_width = kDefaultMaxDenseWidth);

/// Applies the n-controlled u directly to a state of width n+1.
StateVector apply_reference_mcu(int n, const Unitary2& u, StateVector s);

/// Max absolute entrywise difference. Throws std::invalid_argument on a
/// dimension mismatch.
double operator_distance(const DenseOperator& a, const DenseOperator& b);
double state_distance(const StateVector& a, const StateVector& b);

/// Max-entry deviation of A A^dagger from the identity.
double unitarity_error(const DenseOperator& a);

/// "0110" for basis index 6 at width 4.
std::string basis_label(Qubit width, std::uint64_t index);

}  // namespace mcusynth
