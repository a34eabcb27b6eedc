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

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mcusynth/circuit.hpp"

namespace mcusynth {

/// Malformed circuit text; `line()` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  [[nodiscard]] std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Tolerance applied to the V binding when reading a circuit file.
inline constexpr double kIngestUnitaryTolerance = 1e-9;

// Line-oriented text, '#' starts a comment:
//
//   qubits <m>
//   vmatrix <re> <im> <re> <im> <re> <im> <re> <im>   (optional, row-major V)
//   cnot <c> <t> | cv <c> <t> | cvdg <c> <t>          (one per line, in order)
//
// Reals are written in shortest round-trip form, so write/parse is exact.

void write_circuit(std::ostream& os, const Circuit& c);
std::string circuit_to_string(const Circuit& c);

Circuit parse_circuit(std::istream& is);
Circuit parse_circuit(std::string_view text);

/// Throws std::runtime_error if the file cannot be opened or written.
void save_circuit(const std::filesystem::path& path, const Circuit& c);
Circuit load_circuit(const std::filesystem::path& path);

/// Shortest decimal form that reads back to the same double.
std::string format_real(double x);

}  // namespace mcusynth
