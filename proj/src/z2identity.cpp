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

#include "mcusynth/z2identity.hpp"

#include <bit>
#include <random>
#include <stdexcept>

namespace mcusynth {
namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

void require_bit(int b) {
  if (b != 0 && b != 1) throw std::invalid_argument("bit value must be 0 or 1, got " + std::to_string(b));
}

std::string describe(const BitVector& xs) { return "x=" + xs.to_string(); }

void fail(VerificationReport& report, std::string what) {
  if (report.passed) {
    report.passed = false;
    report.counterexample = std::move(what);
  }
}

// Pascal row n: C(n, 0..n).
std::vector<std::int64_t> pascal_row(int n) {
  std::vector<std::int64_t> row{1};
  for (int r = 1; r <= n; ++r) {
    std::vector<std::int64_t> next(static_cast<std::size_t>(r) + 1, 1);
    for (int k = 1; k < r; ++k) next[k] = checked_add(row[k - 1], row[k]);
    row = std::move(next);
  }
  return row;
}

}  // namespace

BitVector::BitVector(std::vector<Bit> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw std::invalid_argument("BitVector must have length >= 1");
  for (Bit b : bits_) require_bit(b);
}

BitVector::BitVector(std::initializer_list<int> bits) {
  if (bits.size() == 0) throw std::invalid_argument("BitVector must have length >= 1");
  bits_.reserve(bits.size());
  for (int b : bits) {
    require_bit(b);
    bits_.push_back(static_cast<Bit>(b));
  }
}

BitVector BitVector::from_mask(int n, std::uint64_t mask) {
  if (n < 1 || n > 64) throw std::out_of_range("BitVector::from_mask: n must be in [1, 64]");
  std::vector<Bit> bits(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) bits[i] = static_cast<Bit>((mask >> i) & 1U);
  return BitVector(std::move(bits));
}

std::uint64_t BitVector::mask() const {
  if (bits_.size() > 64) throw std::length_error("BitVector::mask: more than 64 bits");
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i) m |= static_cast<std::uint64_t>(bits_[i]) << i;
  return m;
}

BitVector BitVector::extended(Bit bit) const {
  std::vector<Bit> bits = bits_;
  bits.push_back(bit);
  return BitVector(std::move(bits));
}

std::string BitVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (i) s += ',';
    s += static_cast<char>('0' + bits_[i]);
  }
  return s + ")";
}

SignedParityTerm::SignedParityTerm(std::vector<int> subset) : subset_(std::move(subset)) {
  if (subset_.empty()) throw std::invalid_argument("SignedParityTerm: subset must be nonempty");
  for (std::size_t i = 0; i < subset_.size(); ++i) {
    if (subset_[i] < 0 || subset_[i] >= 64) throw std::out_of_range("SignedParityTerm: index out of range");
    if (i > 0 && subset_[i] <= subset_[i - 1]) {
      throw std::invalid_argument("SignedParityTerm: indices must be strictly increasing");
    }
    mask_ |= std::uint64_t{1} << subset_[i];
  }
  sign_ = (subset_.size() % 2 == 1) ? 1 : -1;
}

std::vector<SignedParityTerm> canonical_parity_terms(int n) {
  if (n < 1 || n > 30) throw std::out_of_range("canonical_parity_terms: n must be in [1, 30]");
  std::vector<SignedParityTerm> terms;
  terms.reserve((std::size_t{1} << n) - 1);
  for (int size = 1; size <= n; ++size) {
    // Lexicographic walk over size-element combinations of {0..n-1}.
    std::vector<int> combo(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) combo[i] = i;
    while (true) {
      terms.emplace_back(combo);
      int i = size - 1;
      while (i >= 0 && combo[i] == n - size + i) --i;
      if (i < 0) break;
      ++combo[i];
      for (int j = i + 1; j < size; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
  return terms;
}

Bit xor_mod2(Bit x, Bit y) {
  require_bit(x);
  require_bit(y);
  return static_cast<Bit>((x + y) % 2);
}

std::int64_t tilde_oplus(std::int64_t x, std::int64_t y) {
  return checked_sub(checked_add(x, y), checked_mul(2, checked_mul(x, y)));
}

std::int64_t f_direct(const BitVector& xs, int limit) {
  const int n = static_cast<int>(xs.size());
  if (n > limit) {
    throw std::length_error("f_direct: n=" + std::to_string(n) + " exceeds exhaustive limit " +
                            std::to_string(limit));
  }
  const auto terms = canonical_parity_terms(n);
  return f_direct(xs, terms);
}

std::int64_t f_direct(const BitVector& xs, std::span<const SignedParityTerm> terms) {
  const std::size_t n = xs.size();
  if (n > 62 || terms.size() != (std::size_t{1} << n) - 1) {
    throw std::invalid_argument("f_direct: term list does not match assignment length");
  }
  const std::uint64_t x = xs.mask();
  std::int64_t sum = 0;
  for (const auto& term : terms) {
    // Iterated XOR of the selected bits is the parity of their popcount.
    const int parity = std::popcount(term.mask() & x) & 1;
    sum = checked_add(sum, term.sign() * parity);
  }
  return sum;
}

std::int64_t f_recurrent(const BitVector& xs) {
  std::int64_t f = xs[0];
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const std::int64_t x = xs[i];
    f = checked_sub(checked_add(f, x), tilde_oplus(f, x));
  }
  return f;
}

std::int64_t f_closed_form(const BitVector& xs) {
  for (Bit b : xs.bits()) {
    if (b == 0) return 0;
  }
  if (xs.size() > 63) throw std::overflow_error("f_closed_form: 2^(n-1) not representable");
  return std::int64_t{1} << (xs.size() - 1);
}

VerificationReport verify_prop_a(int n, int limit) {
  if (n < 1 || n > limit) {
    throw std::out_of_range("verify_prop_a: n=" + std::to_string(n) + " outside [1, " + std::to_string(limit) +
                            "]");
  }
  VerificationReport report;
  report.name = "prop-a n=" + std::to_string(n);
  const auto terms = canonical_parity_terms(n);
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < count; ++m) {
    const BitVector xs = BitVector::from_mask(n, m);
    const std::int64_t direct = f_direct(xs, terms);
    const std::int64_t closed = f_closed_form(xs);
    const std::int64_t rec = f_recurrent(xs);
    ++report.cases;
    if (direct != closed || direct != rec) {
      fail(report, describe(xs) + " direct=" + std::to_string(direct) + " closed=" + std::to_string(closed) +
                       " recurrent=" + std::to_string(rec));
      break;
    }
  }
  return report;
}

VerificationReport verify_prop_b(int n, int limit) {
  if (n < 2 || n > limit) {
    throw std::out_of_range("verify_prop_b: n=" + std::to_string(n) + " outside [2, " + std::to_string(limit) +
                            "]");
  }
  VerificationReport report;
  report.name = "prop-b n=" + std::to_string(n);
  const auto prefix_terms = canonical_parity_terms(n - 1);
  const auto full_terms = canonical_parity_terms(n);
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  for (std::uint64_t m = 0; m < count; ++m) {
    const BitVector prefix = BitVector::from_mask(n - 1, m);
    const std::int64_t f_prefix = f_direct(prefix, prefix_terms);
    for (Bit last : {Bit{0}, Bit{1}}) {
      const BitVector xs = prefix.extended(last);
      const std::int64_t lhs = f_direct(xs, full_terms);
      const std::int64_t rhs = f_prefix + last - tilde_oplus(f_prefix, last);
      ++report.cases;
      if (lhs != rhs) {
        fail(report, describe(xs) + " lhs=" + std::to_string(lhs) + " rhs=" + std::to_string(rhs));
        return report;
      }
    }
  }
  return report;
}

VerificationReport verify_recurrent_sampled(int n, std::uint64_t samples, std::uint64_t seed) {
  if (n < 1 || n > 62) throw std::out_of_range("verify_recurrent_sampled: n must be in [1, 62]");
  VerificationReport report;
  report.name = "prop-a n=" + std::to_string(n) + " (recurrent, sampled)";
  std::mt19937_64 rng(seed);
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  auto check = [&](std::uint64_t m) {
    const BitVector xs = BitVector::from_mask(n, m);
    const std::int64_t rec = f_recurrent(xs);
    const std::int64_t closed = f_closed_form(xs);
    ++report.cases;
    if (rec != closed) {
      fail(report, describe(xs) + " recurrent=" + std::to_string(rec) + " closed=" + std::to_string(closed));
    }
  };
  check(0);
  check(full);
  for (std::uint64_t s = 0; s < samples && report.passed; ++s) check(rng() & full);
  return report;
}

VerificationReport verify_lemma1(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("verify_lemma1: empty range");
  VerificationReport report;
  report.name = "lemma1 range=[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
  auto triple = [](std::int64_t x, std::int64_t y, std::int64_t z) {
    return "(x,y,z)=(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")";
  };
  for (std::int64_t x = lo; x <= hi; ++x) {
    if (tilde_oplus(x, 0) != x || tilde_oplus(x, 1) != 1 - x || tilde_oplus(x, x) != 2 * x * (1 - x)) {
      fail(report, "unit laws at x=" + std::to_string(x));
      return report;
    }
    for (std::int64_t y = lo; y <= hi; ++y) {
      for (std::int64_t z = lo; z <= hi; ++z) {
        ++report.cases;
        if (tilde_oplus(x, y) != tilde_oplus(y, x)) {
          fail(report, "commutativity " + triple(x, y, z));
        } else if (tilde_oplus(tilde_oplus(x, y), z) != tilde_oplus(x, tilde_oplus(y, z))) {
          fail(report, "associativity " + triple(x, y, z));
        } else if (tilde_oplus(x, z) + tilde_oplus(y, z) != tilde_oplus(x + y, z) + z) {
          fail(report, "sum shift " + triple(x, y, z));
        } else if (tilde_oplus(x, z) - tilde_oplus(y, z) != tilde_oplus(x - y, z) - z) {
          fail(report, "difference shift " + triple(x, y, z));
        }
        if (!report.passed) return report;
      }
    }
  }
  return report;
}

VerificationReport verify_lemma2(int n, std::uint64_t trials, std::uint64_t seed) {
  if (n < 1 || n > 62) throw std::out_of_range("verify_lemma2: n must be in [1, 62]");
  if (trials < 1) throw std::invalid_argument("verify_lemma2: trials must be >= 1");
  VerificationReport report;
  report.name = "lemma2 n=" + std::to_string(n);
  std::mt19937_64 rng(seed);
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const BitVector xs = BitVector::from_mask(n, rng() & full);
    const Bit z = static_cast<Bit>(rng() & 1U);
    std::int64_t plain_lhs = 0, plain_sum = 0, alt_lhs = 0, alt_sum = 0;
    for (int i = 0; i < n; ++i) {
      const std::int64_t sign = (i % 2 == 0) ? 1 : -1;  // (-1)^(i-1) with 1-based i
      const std::int64_t parity = xor_mod2(xs[i], z);
      plain_lhs += parity;
      plain_sum += xs[i];
      alt_lhs += sign * parity;
      alt_sum += sign * xs[i];
    }
    const std::int64_t plain_rhs = tilde_oplus(plain_sum, z) + (n - 1) * z;
    const std::int64_t even_n = (n % 2 == 0) ? 1 : 0;  // (1 + (-1)^n) / 2
    const std::int64_t alt_rhs = tilde_oplus(alt_sum, z) - even_n * z;
    ++report.cases;
    if (plain_lhs != plain_rhs) {
      fail(report, "sum identity " + describe(xs) + " z=" + std::to_string(z) + " lhs=" + std::to_string(plain_lhs) +
                       " rhs=" + std::to_string(plain_rhs));
      break;
    }
    if (alt_lhs != alt_rhs) {
      fail(report, "alternating identity " + describe(xs) + " z=" + std::to_string(z) +
                       " lhs=" + std::to_string(alt_lhs) + " rhs=" + std::to_string(alt_rhs));
      break;
    }
  }
  return report;
}

std::int64_t binomial(int n, int k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be >= 0");
  if (k < 0 || k > n) return 0;
  return pascal_row(n)[static_cast<std::size_t>(k)];
}

std::pair<std::int64_t, std::int64_t> verify_lemma3(int n) {
  if (n < 2) throw std::out_of_range("verify_lemma3: n must be >= 2");
  const auto row = pascal_row(n);
  std::int64_t lhs = 0;
  for (int i = 1; i <= n - 1; ++i) {
    const std::int64_t term = checked_sub(row[static_cast<std::size_t>(i)], 1);
    lhs = (i % 2 == 0) ? checked_add(lhs, term) : checked_sub(lhs, term);
  }
  const std::int64_t minus_one_pow_n = (n % 2 == 0) ? 1 : -1;
  const std::int64_t rhs = -(1 + minus_one_pow_n) / 2;
  return {lhs, rhs};
}

}  // namespace mcusynth
