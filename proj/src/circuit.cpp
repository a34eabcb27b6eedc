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

#include "mcusynth/circuit.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mcusynth {

std::string_view gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::Cnot:
      return "cnot";
    case GateKind::CV:
      return "cv";
    case GateKind::CVdg:
      return "cvdg";
  }
  return "?";
}

Gate inverse(const Gate& g) {
  switch (g.kind) {
    case GateKind::CV:
      return {GateKind::CVdg, g.control, g.target};
    case GateKind::CVdg:
      return {GateKind::CV, g.control, g.target};
    case GateKind::Cnot:
      break;
  }
  return g;
}

Circuit::Circuit(Qubit width, std::optional<Unitary2> v_binding) : width_(width), v_binding_(std::move(v_binding)) {
  if (width == 0) throw std::invalid_argument("circuit width must be >= 1");
}

void Circuit::append(const Gate& g) {
  if (g.control >= width_ || g.target >= width_) {
    throw std::out_of_range("gate " + std::string(gate_kind_name(g.kind)) + "(" + std::to_string(g.control) + "," +
                            std::to_string(g.target) + ") out of range for width " + std::to_string(width_));
  }
  if (g.control == g.target) {
    throw std::invalid_argument("gate control and target must differ (qubit " + std::to_string(g.control) + ")");
  }
  gates_.push_back(g);
}

bool Circuit::uses_v() const {
  return std::any_of(gates_.begin(), gates_.end(), [](const Gate& g) { return g.kind != GateKind::Cnot; });
}

Circuit invert(const Circuit& c) {
  Circuit out(c.width(), c.v_binding());
  for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) out.append(inverse(*it));
  return out;
}

GateCounts gate_count(const Circuit& c) {
  GateCounts counts;
  for (const Gate& g : c.gates()) {
    switch (g.kind) {
      case GateKind::Cnot:
        ++counts.cnot;
        break;
      case GateKind::CV:
        ++counts.cv;
        break;
      case GateKind::CVdg:
        ++counts.cvdg;
        break;
    }
  }
  counts.total = c.size();
  return counts;
}

}  // namespace mcusynth
