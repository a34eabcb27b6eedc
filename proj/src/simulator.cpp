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

#include "mcusynth/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mcusynth {
namespace {

// Keeps dimension arithmetic well inside 64 bits for state vectors.
constexpr Qubit kMaxStateWidth = 30;

void check_width(Qubit width) {
  if (width == 0 || width > kMaxStateWidth) {
    throw std::length_error("state width must be in [1, " + std::to_string(kMaxStateWidth) + "], got " +
                            std::to_string(width));
  }
}

}  // namespace

StateVector::StateVector(Qubit width) : width_(width) {
  check_width(width);
  amps_.assign(std::size_t{1} << width, Complex{});
  amps_[0] = 1.0;
}

StateVector::StateVector(Qubit width, std::vector<Complex> amplitudes) : width_(width), amps_(std::move(amplitudes)) {
  check_width(width);
  if (amps_.size() != (std::size_t{1} << width)) {
    throw std::invalid_argument("state vector length must be 2^width");
  }
}

StateVector StateVector::basis(Qubit width, std::uint64_t index) {
  StateVector s(width);
  if (index >= s.dimension()) throw std::out_of_range("basis index out of range");
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

StateVector StateVector::from_bitstring(std::string_view bits) {
  if (bits.empty()) throw std::invalid_argument("empty bitstring");
  std::uint64_t index = 0;
  for (char ch : bits) {
    if (ch != '0' && ch != '1') throw std::invalid_argument("bitstring may only contain 0 and 1");
    index = (index << 1) | static_cast<std::uint64_t>(ch - '0');
  }
  return basis(static_cast<Qubit>(bits.size()), index);
}

double StateVector::norm() const {
  double sum = 0.0;
  for (const Complex& a : amps_) sum += std::norm(a);
  return std::sqrt(sum);
}

DenseOperator::DenseOperator(Qubit width) : width_(width) {
  check_width(width);
  dim_ = std::size_t{1} << width;
  m_.assign(dim_ * dim_, Complex{});
  for (std::size_t i = 0; i < dim_; ++i) at(i, i) = 1.0;
}

StateVector DenseOperator::apply(const StateVector& s) const {
  if (s.width() != width_) throw std::invalid_argument("operator/state width mismatch");
  std::vector<Complex> out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    Complex acc{};
    for (std::size_t c = 0; c < dim_; ++c) acc += at(r, c) * s[c];
    out[r] = acc;
  }
  return StateVector(width_, std::move(out));
}

void apply_gate(StateVector& s, const Gate& g, const std::optional<Unitary2>& v) {
  const Qubit m = s.width();
  if (g.control >= m || g.target >= m || g.control == g.target) {
    throw std::out_of_range("gate does not fit a state of width " + std::to_string(m));
  }
  const std::uint64_t cmask = qubit_mask(m, g.control);
  const std::uint64_t tmask = qubit_mask(m, g.target);
  auto amps = s.amplitudes();

  if (g.kind == GateKind::Cnot) {
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
      if ((i & cmask) && !(i & tmask)) std::swap(amps[i], amps[i | tmask]);
    }
    return;
  }
  if (!v) throw std::invalid_argument("controlled-V gate applied without a V binding");
  const Unitary2 op = g.kind == GateKind::CV ? *v : dagger(*v);
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    if ((i & cmask) && !(i & tmask)) {
      const Complex a0 = amps[i];
      const Complex a1 = amps[i | tmask];
      amps[i] = op(0, 0) * a0 + op(0, 1) * a1;
      amps[i | tmask] = op(1, 0) * a0 + op(1, 1) * a1;
    }
  }
}

StateVector run(const Circuit& c, StateVector s) {
  if (s.width() != c.width()) throw std::invalid_argument("state width does not match circuit width");
  if (c.uses_v() && !c.v_binding()) throw std::invalid_argument("circuit uses V but has no V binding");
  for (const Gate& g : c.gates()) apply_gate(s, g, c.v_binding());
  return s;
}

DenseOperator circuit_unitary(const Circuit& c, Qubit max_width) {
  if (c.width() > max_width) {
    throw std::length_error("circuit width " + std::to_string(c.width()) + " exceeds dense bound " +
                            std::to_string(max_width));
  }
  if (c.uses_v() && !c.v_binding()) throw std::invalid_argument("circuit uses V but has no V binding");
  DenseOperator op(c.width());
  const std::size_t dim = op.dimension();
  for (std::size_t col = 0; col < dim; ++col) {
    const StateVector out = run(c, StateVector::basis(c.width(), col));
    for (std::size_t row = 0; row < dim; ++row) op.at(row, col) = out[row];
  }
  return op;
}

DenseOperator reference_mcu(int n, const Unitary2& u, Qubit max_width) {
  if (n < 1) throw std::invalid_argument("reference_mcu: n must be >= 1");
  const auto width = static_cast<Qubit>(n + 1);
  if (width > max_width) throw std::length_error("reference_mcu: width exceeds dense bound");
  DenseOperator op(width);
  // All controls 1: indices ...110 and ...111 (target is the least significant bit).
  const std::size_t hi = op.dimension() - 1;
  const std::size_t lo = hi - 1;
  op.at(lo, lo) = u(0, 0);
  op.at(lo, hi) = u(0, 1);
  op.at(hi, lo) = u(1, 0);
  op.at(hi, hi) = u(1, 1);
  return op;
}

StateVector apply_reference_mcu(int n, const Unitary2& u, StateVector s) {
  if (n < 1 || s.width() != static_cast<Qubit>(n + 1)) {
    throw std::invalid_argument("apply_reference_mcu: state width must be n+1");
  }
  auto amps = s.amplitudes();
  const std::size_t hi = amps.size() - 1;
  const std::size_t lo = hi - 1;
  const Complex a0 = amps[lo], a1 = amps[hi];
  amps[lo] = u(0, 0) * a0 + u(0, 1) * a1;
  amps[hi] = u(1, 0) * a0 + u(1, 1) * a1;
  return s;
}

double operator_distance(const DenseOperator& a, const DenseOperator& b) {
  if (a.dimension() != b.dimension()) throw std::invalid_argument("operator_distance: dimension mismatch");
  double d = 0.0;
  for (std::size_t r = 0; r < a.dimension(); ++r) {
    for (std::size_t c = 0; c < a.dimension(); ++c) d = std::max(d, std::abs(a.at(r, c) - b.at(r, c)));
  }
  return d;
}

double state_distance(const StateVector& a, const StateVector& b) {
  if (a.dimension() != b.dimension()) throw std::invalid_argument("state_distance: dimension mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < a.dimension(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

double unitarity_error(const DenseOperator& a) {
  const std::size_t dim = a.dimension();
  double err = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      Complex acc{};
      for (std::size_t k = 0; k < dim; ++k) acc += a.at(i, k) * std::conj(a.at(j, k));
      err = std::max(err, std::abs(acc - (i == j ? 1.0 : 0.0)));
    }
  }
  return err;
}

std::string basis_label(Qubit width, std::uint64_t index) {
  std::string s(width, '0');
  for (Qubit q = 0; q < width; ++q) {
    if (index & qubit_mask(width, q)) s[q] = '1';
  }
  return s;
}

}  // namespace mcusynth
