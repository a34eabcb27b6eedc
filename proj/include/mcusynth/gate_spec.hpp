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

#include <string>
#include <string_view>

#include "mcusynth/unitary2.hpp"

namespace mcusynth {

/// Target gate given on the command line: one of I X Y Z H S T, or
/// "@file.json" holding {"matrix": [[[re,im],[re,im]],[[re,im],[re,im]]]}.
struct GateSpec {
  std::string label;
  Unitary2 matrix;
};

/// Throws std::invalid_argument for unknown names, unreadable or malformed
/// JSON, and matrices that are not unitary within 1e-9.
GateSpec parse_gate_spec(std::string_view spec);

/// Parses the JSON matrix document itself.
Unitary2 gate_matrix_from_json(std::string_view json_text);

}  // namespace mcusynth
