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
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mcusynth {

using Bit = std::uint8_t;

/// Default bound on n for checks that enumerate all 2^n subsets per assignment.
inline constexpr int kExhaustiveLimit = 14;

/// An assignment (x_1, ..., x_n) of Z2 values, n >= 1.
class BitVector {
 public:
  explicit BitVector(std::vector<Bit> bits);
  BitVector(std::initializer_list<int> bits);

  /// Assignment of length n whose i-th bit (1-based x_{i+1}) is bit i of `mask`.
  static BitVector from_mask(int n, std::uint64_t mask);

  [[nodiscard]] std::size_t size() const { return bits_.size(); }
  [[nodiscard]] Bit operator[](std::size_t i) const { return bits_[i]; }
  [[nodiscard]] std::span<const Bit> bits() const { return bits_; }

  /// Packs the bits so that x_{i+1} lands in bit i. Requires size() <= 64.
  [[nodiscard]] std::uint64_t mask() const;

  /// The assignment with `bit` appended as x_{n+1}.
  [[nodiscard]] BitVector extended(Bit bit) const;

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::vector<Bit> bits_;
};

/// One term of the alternating subset-parity sum: the XOR of the selected
/// variables, weighted by (-1)^(|subset|-1).
class SignedParityTerm {
 public:
  /// `subset` holds 0-based indices, strictly increasing, each below 64.
  explicit SignedParityTerm(std::vector<int> subset);

  [[nodiscard]] const std::vector<int>& subset() const { return subset_; }
  [[nodiscard]] int sign() const { return sign_; }
  [[nodiscard]] std::uint64_t mask() const { return mask_; }

  friend bool operator==(const SignedParityTerm&, const SignedParityTerm&) = default;

 private:
  std::vector<int> subset_;
  int sign_ = 1;
  std::uint64_t mask_ = 0;
};

/// All 2^n - 1 nonempty subsets of {0..n-1}, ordered by size and then
/// lexicographically within a size.
std::vector<SignedParityTerm> canonical_parity_terms(int n);

Bit xor_mod2(Bit x, Bit y);

/// x + y - 2xy over the integers. Throws std::overflow_error when the result
/// is not representable.
std::int64_t tilde_oplus(std::int64_t x, std::int64_t y);

/// Alternating sum over all nonempty subsets of the iterated XOR of the
/// selected bits. Rejects n > limit with std::length_error.
std::int64_t f_direct(const BitVector& xs, int limit = kExhaustiveLimit);

/// Same sum evaluated against a precomputed term list (must match xs.size()).
std::int64_t f_direct(const BitVector& xs, std::span<const SignedParityTerm> terms);

/// F_1 = x_1, F_{k+1} = F_k + x_{k+1} - F_k (+~) x_{k+1}.
std::int64_t f_recurrent(const BitVector& xs);

/// 2^(n-1) * x_1 * ... * x_n.
std::int64_t f_closed_form(const BitVector& xs);

struct VerificationReport {
  std::string name;
  bool passed = true;
  std::uint64_t cases = 0;
  std::optional<std::string> counterexample;
};

/// F_direct == 2^(n-1) prod(x) and F_direct == F_recurrent over all 2^n
/// assignments. Throws std::out_of_range unless 1 <= n <= limit.
VerificationReport verify_prop_a(int n, int limit = kExhaustiveLimit);

/// Pointwise recurrence F_n(xs, x) = F_{n-1}(xs) + x - F_{n-1}(xs) (+~) x,
/// with both sides from F_direct, over all 2^n assignments (2 <= n <= limit).
VerificationReport verify_prop_b(int n, int limit = kExhaustiveLimit);

/// Sampled closed-form check of F_recurrent for n beyond the exhaustive
/// limit. The all-ones and all-zeros assignments are always included.
VerificationReport verify_recurrent_sampled(int n, std::uint64_t samples, std::uint64_t seed);

/// Commutativity, associativity, both shift laws, and x(+~)0, x(+~)1, x(+~)x
/// on every triple in [lo, hi]^3.
VerificationReport verify_lemma1(std::int64_t lo, std::int64_t hi);

/// Both sum-shift identities on `trials` random (xs, z), xs of length n.
VerificationReport verify_lemma2(int n, std::uint64_t trials, std::uint64_t seed);

/// Exact binomial via Pascal's rule; throws std::overflow_error.
std::int64_t binomial(int n, int k);

/// Returns (sum_{i=1}^{n-1} (-1)^i (C(n,i) - 1), -(1 + (-1)^n) / 2). n >= 2.
std::pair<std::int64_t, std::int64_t> verify_lemma3(int n);

}  // namespace mcusynth
