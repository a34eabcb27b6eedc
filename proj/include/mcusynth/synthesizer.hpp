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
#include <vector>

#include "mcusynth/circuit.hpp"
#include "mcusynth/unitary2.hpp"
#include "mcusynth/z2identity.hpp"

namespace mcusynth {

/// Hard cap on controls; the naive construction has 2^n - 1 blocks.
inline constexpr int kMaxControls = 20;

/// Everything needed to emit an n-controlled U: the root V with
/// V^(2^(n-1)) = U and one signed parity block per nonempty control subset.
struct SynthesisPlan {
  int n_controls = 0;
  Unitary2 target_u;
  Unitary2 v;
  std::vector<SignedParityTerm> blocks;
};

SynthesisPlan make_plan(int n, const Unitary2& u);

struct SynthOptions {
  /// Simulate the result against reference_mcu before returning.
  bool verify = false;
  /// Widths above this are rejected when verify is set.
  Qubit verify_max_width = 10;
  double verify_tolerance = 1e-9;
};

/// Controlled-U on 2 qubits: a single CV(0,1) with V = u.
Circuit synth_cu(const Unitary2& u);

/// Controlled-controlled-U on 3 qubits with V^2 = u:
/// CV(0,2) CV(1,2) CNOT(0,1) CVdg(1,2) CNOT(0,1).
Circuit synth_ccu(const Unitary2& u);

/// n-controlled U on n+1 qubits (controls 0..n-1, target n). For each
/// subset S of controls in canonical order the block folds the parity of S
/// onto its last wire with a CNOT chain, applies CV (|S| odd) or CVdg
/// (|S| even) from that wire onto the target, and unfolds the chain.
/// Throws std::invalid_argument for n < 1, std::length_error for
/// n > kMaxControls or a verify request above the width bound, and
/// std::logic_error if inline verification fails.
Circuit synth_general(int n, const Unitary2& u, const SynthOptions& options = {});

/// Three controls; same circuit as synth_general(3, u).
Circuit synth_cccu(const Unitary2& u);

/// Removes adjacent mutually-inverse pairs (CNOT/CNOT on the same wires,
/// CV/CVdg on the same wires in either order) until none remain.
Circuit peephole_cancel(const Circuit& c);

/// Net count of V minus V^dagger applications on `target` when the circuit
/// runs on the classical basis input whose controls are `controls` (qubit i
/// gets controls[i]; the target wire's own value is irrelevant). Never
/// touches a matrix. Throws std::invalid_argument unless every CV/CVdg
/// targets `target` and no gate reads or CNOT-targets it.
std::int64_t net_v_exponent(const Circuit& c, const BitVector& controls, Qubit target);

/// Exact CNOT count of synth_general(n, .): 2 (n 2^(n-1) - 2^n + 1).
std::uint64_t expected_cnot_count(int n);

}  // namespace mcusynth
