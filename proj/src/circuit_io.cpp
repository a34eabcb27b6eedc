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

#include "mcusynth/circuit_io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

namespace mcusynth {
namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

double parse_real(std::string_view word, std::size_t line) {
  double value = 0.0;
  const char* first = word.data();
  const char* last = word.data() + word.size();
  if (!word.empty() && word.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) throw ParseError(line, "invalid number '" + std::string(word) + "'");
  return value;
}

Qubit parse_index(std::string_view word, std::size_t line) {
  Qubit value = 0;
  const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc{} || ptr != word.data() + word.size()) {
    throw ParseError(line, "invalid qubit index '" + std::string(word) + "'");
  }
  return value;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

std::string format_real(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), ptr);
}

void write_circuit(std::ostream& os, const Circuit& c) {
  os << "qubits " << c.width() << '\n';
  if (c.v_binding()) {
    os << "vmatrix";
    for (const Complex& z : c.v_binding()->entries()) os << ' ' << format_real(z.real()) << ' ' << format_real(z.imag());
    os << '\n';
  }
  for (const Gate& g : c.gates()) os << gate_kind_name(g.kind) << ' ' << g.control << ' ' << g.target << '\n';
}

std::string circuit_to_string(const Circuit& c) {
  std::ostringstream os;
  write_circuit(os, c);
  return os.str();
}

Circuit parse_circuit(std::istream& is) {
  std::optional<Circuit> circuit;
  std::optional<Unitary2> pending_v;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(is, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto words = split_words(line);
    if (words.empty()) continue;
    const std::string_view key = words[0];

    if (key == "qubits") {
      if (circuit) throw ParseError(line_no, "duplicate 'qubits' header");
      if (words.size() != 2) throw ParseError(line_no, "expected 'qubits <m>'");
      const Qubit width = parse_index(words[1], line_no);
      if (width == 0) throw ParseError(line_no, "circuit width must be >= 1");
      circuit.emplace(width);
      continue;
    }
    if (!circuit) throw ParseError(line_no, "'qubits' header must come first");

    if (key == "vmatrix") {
      if (circuit->v_binding()) throw ParseError(line_no, "duplicate 'vmatrix'");
      if (!circuit->empty()) throw ParseError(line_no, "'vmatrix' must precede the gates");
      if (words.size() != 9) throw ParseError(line_no, "expected 8 numbers after 'vmatrix'");
      Unitary2::Entries entries;
      for (std::size_t i = 0; i < 4; ++i) {
        entries[i] = Complex(parse_real(words[1 + 2 * i], line_no), parse_real(words[2 + 2 * i], line_no));
      }
      try {
        circuit->set_v_binding(Unitary2::from_entries(entries, kIngestUnitaryTolerance));
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, std::string("vmatrix: ") + e.what());
      }
      continue;
    }

    GateKind kind;
    if (key == "cnot") {
      kind = GateKind::Cnot;
    } else if (key == "cv") {
      kind = GateKind::CV;
    } else if (key == "cvdg") {
      kind = GateKind::CVdg;
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(key) + "'");
    }
    if (words.size() != 3) throw ParseError(line_no, "expected '" + std::string(key) + " <control> <target>'");
    try {
      circuit->append(Gate{kind, parse_index(words[1], line_no), parse_index(words[2], line_no)});
    } catch (const std::logic_error& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (!circuit) throw ParseError(0, "missing 'qubits' header");
  return std::move(*circuit);
}

Circuit parse_circuit(std::string_view text) {
  std::istringstream is{std::string(text)};
  return parse_circuit(is);
}

void save_circuit(const std::filesystem::path& path, const Circuit& c) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  write_circuit(os, c);
  os.flush();
  if (!os) throw std::runtime_error("failed writing '" + path.string() + "'");
}

Circuit load_circuit(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open '" + path.string() + "'");
  return parse_circuit(is);
}

}  // namespace mcusynth
