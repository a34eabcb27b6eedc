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

#include "mcusynth/gate_spec.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "mcusynth/circuit_io.hpp"

namespace mcusynth {

Unitary2 gate_matrix_from_json(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("gate JSON: ") + e.what());
  }
  const auto shape_error = [] {
    return std::invalid_argument(R"(gate JSON must be {"matrix": [[[re,im],[re,im]],[[re,im],[re,im]]]})");
  };
  if (!doc.is_object() || !doc.contains("matrix")) throw shape_error();
  const auto& rows = doc["matrix"];
  if (!rows.is_array() || rows.size() != 2) throw shape_error();

  Unitary2::Entries entries;
  for (std::size_t r = 0; r < 2; ++r) {
    if (!rows[r].is_array() || rows[r].size() != 2) throw shape_error();
    for (std::size_t c = 0; c < 2; ++c) {
      const auto& z = rows[r][c];
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) throw shape_error();
      entries[r * 2 + c] = Complex(z[0].get<double>(), z[1].get<double>());
    }
  }
  return Unitary2::from_entries(entries, kIngestUnitaryTolerance);
}

GateSpec parse_gate_spec(std::string_view spec) {
  if (spec.empty()) throw std::invalid_argument("empty gate spec");
  if (spec.front() == '@') {
    const std::string path(spec.substr(1));
    std::ifstream is(path);
    if (!is) throw std::invalid_argument("cannot open gate file '" + path + "'");
    std::stringstream buf;
    buf << is.rdbuf();
    return {std::string(spec), gate_matrix_from_json(buf.str())};
  }
  if (spec.size() == 1) {
    switch (spec.front()) {
      case 'I':
      case 'i':
        return {"I", Unitary2::identity()};
      case 'X':
      case 'x':
        return {"X", Unitary2::pauli_x()};
      case 'Y':
      case 'y':
        return {"Y", Unitary2::pauli_y()};
      case 'Z':
      case 'z':
        return {"Z", Unitary2::pauli_z()};
      case 'H':
      case 'h':
        return {"H", Unitary2::hadamard()};
      case 'S':
      case 's':
        return {"S", Unitary2::phase_s()};
      case 'T':
      case 't':
        return {"T", Unitary2::phase_t()};
      default:
        break;
    }
  }
  throw std::invalid_argument("unknown gate '" + std::string(spec) + "' (expected I, X, Y, Z, H, S, T or @file.json)");
}

}  // namespace mcusynth
