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

#include "mcusynth/synthesizer.hpp"

#include <stdexcept>
#include <string>

#include "mcusynth/simulator.hpp"

namespace mcusynth {

SynthesisPlan make_plan(int n, const Unitary2& u) {
  if (n < 1) throw std::invalid_argument("number of controls must be >= 1");
  if (n > kMaxControls) {
    throw std::length_error("number of controls " + std::to_string(n) + " exceeds limit " +
                            std::to_string(kMaxControls));
  }
  return SynthesisPlan{n, u, unitary_root(u, n - 1), canonical_parity_terms(n)};
}

Circuit synth_cu(const Unitary2& u) {
  Circuit c(2, u);
  c.append(Gate::cv(0, 1));
  return c;
}

Circuit synth_ccu(const Unitary2& u) {
  Circuit c(3, unitary_root(u, 1));
  c.append(Gate::cv(0, 2));
  c.append(Gate::cv(1, 2));
  c.append(Gate::cnot(0, 1));
  c.append(Gate::cvdg(1, 2));
  c.append(Gate::cnot(0, 1));
  return c;
}

Circuit synth_general(int n, const Unitary2& u, const SynthOptions& options) {
  const auto width = static_cast<Qubit>(n + 1);
  if (options.verify && n >= 1 && width > options.verify_max_width) {
    throw std::length_error("inline verification limited to width " + std::to_string(options.verify_max_width));
  }
  const SynthesisPlan plan = make_plan(n, u);
  const auto target = static_cast<Qubit>(n);
  Circuit c(width, plan.v);

  for (const SignedParityTerm& block : plan.blocks) {
    const auto& wires = block.subset();
    const auto last = static_cast<Qubit>(wires.back());
    for (std::size_t i = 0; i + 1 < wires.size(); ++i) {
      c.append(Gate::cnot(static_cast<Qubit>(wires[i]), static_cast<Qubit>(wires[i + 1])));
    }
    c.append(block.sign() > 0 ? Gate::cv(last, target) : Gate::cvdg(last, target));
    for (std::size_t i = wires.size() - 1; i > 0; --i) {
      c.append(Gate::cnot(static_cast<Qubit>(wires[i - 1]), static_cast<Qubit>(wires[i])));
    }
  }

  if (options.verify) {
    const double d = operator_distance(circuit_unitary(c, options.verify_max_width), reference_mcu(n, u, width));
    if (!(d < options.verify_tolerance)) {
      throw std::logic_error("synthesized circuit deviates from reference by " + std::to_string(d));
    }
  }
  return c;
}

Circuit synth_cccu(const Unitary2& u) { return synth_general(3, u); }

Circuit peephole_cancel(const Circuit& c) {
  // A stack-based sweep cancels nested pairs too, so one pass reaches the fixpoint.
  std::vector<Gate> kept;
  kept.reserve(c.size());
  for (const Gate& g : c.gates()) {
    if (!kept.empty() && kept.back() == inverse(g)) {
      kept.pop_back();
    } else {
      kept.push_back(g);
    }
  }
  Circuit out(c.width(), c.v_binding());
  for (const Gate& g : kept) out.append(g);
  return out;
}

std::int64_t net_v_exponent(const Circuit& c, const BitVector& controls, Qubit target) {
  if (target >= c.width()) throw std::out_of_range("target wire out of range");
  std::vector<Bit> wire(c.width(), 0);
  for (std::size_t i = 0; i < controls.size() && i < wire.size(); ++i) wire[i] = controls[i];

  std::int64_t exponent = 0;
  for (const Gate& g : c.gates()) {
    if (g.control == target || (g.kind == GateKind::Cnot) == (g.target == target)) {
      throw std::invalid_argument("controlled-V gates must act on the target wire and only there");
    }
    switch (g.kind) {
      case GateKind::Cnot:
        wire[g.target] = xor_mod2(wire[g.target], wire[g.control]);
        break;
      case GateKind::CV:
        exponent += wire[g.control];
        break;
      case GateKind::CVdg:
        exponent -= wire[g.control];
        break;
    }
  }
  return exponent;
}

std::uint64_t expected_cnot_count(int n) {
  if (n < 1 || n > 62) throw std::out_of_range("expected_cnot_count: n out of range");
  const auto nn = static_cast<std::uint64_t>(n);
  return 2 * (nn * (std::uint64_t{1} << (n - 1)) - (std::uint64_t{1} << n) + 1);
}

}  // namespace mcusynth
