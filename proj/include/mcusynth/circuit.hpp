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
#include <string_view>
#include <vector>

#include "mcusynth/unitary2.hpp"

namespace mcusynth {

using Qubit = std::uint32_t;

/// CV and CVdg apply the circuit's bound V (resp. V^dagger) to the target
/// when the control is 1.
enum class GateKind : std::uint8_t { Cnot, CV, CVdg };

std::string_view gate_kind_name(GateKind kind);

struct Gate {
  GateKind kind;
  Qubit control;
  Qubit target;

  static Gate cnot(Qubit c, Qubit t) { return {GateKind::Cnot, c, t}; }
  static Gate cv(Qubit c, Qubit t) { return {GateKind::CV, c, t}; }
  static Gate cvdg(Qubit c, Qubit t) { return {GateKind::CVdg, c, t}; }

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// The gate that undoes `g`: CV <-> CVdg, CNOT unchanged.
Gate inverse(const Gate& g);

/// Qubit 0 is the leftmost tensor factor, i.e. the most significant bit of a
/// basis index. Gates apply in sequence order.
class Circuit {
 public:
  /// Throws std::invalid_argument for width 0.
  explicit Circuit(Qubit width, std::optional<Unitary2> v_binding = std::nullopt);

  /// Throws std::out_of_range if an index is >= width and
  /// std::invalid_argument if control == target.
  void append(const Gate& g);

  void set_v_binding(const Unitary2& v) { v_binding_ = v; }

  [[nodiscard]] Qubit width() const { return width_; }
  [[nodiscard]] std::span<const Gate> gates() const { return gates_; }
  [[nodiscard]] std::size_t size() const { return gates_.size(); }
  [[nodiscard]] bool empty() const { return gates_.empty(); }
  [[nodiscard]] const std::optional<Unitary2>& v_binding() const { return v_binding_; }
  [[nodiscard]] bool uses_v() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  Qubit width_;
  std::vector<Gate> gates_;
  std::optional<Unitary2> v_binding_;
};

/// Reversed gate order with every gate inverted; keeps width and V binding.
Circuit invert(const Circuit& c);

struct GateCounts {
  std::size_t cnot = 0;
  std::size_t cv = 0;
  std::size_t cvdg = 0;
  std::size_t total = 0;

  friend bool operator==(const GateCounts&, const GateCounts&) = default;
};

GateCounts gate_count(const Circuit& c);

}  // namespace mcusynth
