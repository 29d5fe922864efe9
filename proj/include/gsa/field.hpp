/*
 * Copyright 2026 The gsa Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef GSA_FIELD_HPP_
#define GSA_FIELD_HPP_

#include <cstdint>
#include <limits>

#include "gsa/errors.hpp"

namespace gsa {

/// Deterministic Miller-Rabin primality test, exact for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// A prime field F_q. Residues are plain uint64_t in [0, q); all products go
/// through a 128-bit intermediate, so any prime q < 2^62 is exact. The
/// default modulus is the Mersenne prime 2^61-1, which admits a shift-add
/// reduction used here and in the block kernels.
class PrimeField {
 public:
  static constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

  explicit PrimeField(std::uint64_t q = kMersenne61) : q_(q) {
    if (q < 2 || q >= (std::uint64_t{1} << 62) || !is_prime_u64(q)) {
      throw std::invalid_argument("PrimeField: modulus must be a prime in [2, 2^62)");
    }
  }

  std::uint64_t modulus() const { return q_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= q_ ? s - q_ : s;
  }

  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + q_ - b;
  }

  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : q_ - a; }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    if (q_ == kMersenne61) return mul_m61(a, b);
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % q_);
  }

  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1 % q_;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  /// Multiplicative inverse via Fermat. Throws on zero.
  std::uint64_t inv(std::uint64_t a) const {
    if (a == 0) throw DivisionByZeroError("inverse of zero");
    return pow(a, q_ - 2);
  }

  std::uint64_t reduce(unsigned __int128 v) const {
    return static_cast<std::uint64_t>(v % q_);
  }

  /// Canonical residue of a signed integer (paper coefficients like -1 map to q-1).
  std::uint64_t from_signed(long long v) const {
    long long m = static_cast<long long>(q_);
    long long r = v % m;
    if (r < 0) r += m;
    return static_cast<std::uint64_t>(r);
  }

  bool operator==(const PrimeField& o) const { return q_ == o.q_; }
  bool operator!=(const PrimeField& o) const { return q_ != o.q_; }

 private:
  static std::uint64_t mul_m61(std::uint64_t a, std::uint64_t b) {
    unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    std::uint64_t lo = static_cast<std::uint64_t>(p) & kMersenne61;
    std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
    std::uint64_t s = lo + hi;
    s = (s & kMersenne61) + (s >> 61);
    return s >= kMersenne61 ? s - kMersenne61 : s;
  }

  std::uint64_t q_;
};

/// A single residue tagged with its modulus. Bulk data stays in uint64_t
/// vectors handled through PrimeField / kernels; this wrapper is the scalar
/// convenience API, and it rejects cross-field arithmetic.
class FieldElement {
 public:
  FieldElement() : v_(0), q_(2) {}
  FieldElement(const PrimeField& f, std::uint64_t v)
      : v_(v % f.modulus()), q_(f.modulus()) {}
  FieldElement(const PrimeField& f, long long v)
      : v_(f.from_signed(v)), q_(f.modulus()) {}

  std::uint64_t residue() const { return v_; }
  PrimeField field() const { return PrimeField(q_); }

  FieldElement operator+(const FieldElement& o) const {
    check(o);
    return raw(field().add(v_, o.v_), q_);
  }
  FieldElement operator-(const FieldElement& o) const {
    check(o);
    return raw(field().sub(v_, o.v_), q_);
  }
  FieldElement operator*(const FieldElement& o) const {
    check(o);
    return raw(field().mul(v_, o.v_), q_);
  }
  FieldElement operator-() const { return raw(field().neg(v_), q_); }

  FieldElement inverse() const { return raw(field().inv(v_), q_); }

  bool is_zero() const { return v_ == 0; }
  bool operator==(const FieldElement& o) const {
    return q_ == o.q_ && v_ == o.v_;
  }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

 private:
  static FieldElement raw(std::uint64_t v, std::uint64_t q) {
    FieldElement e;
    e.v_ = v;
    e.q_ = q;
    return e;
  }
  void check(const FieldElement& o) const {
    if (q_ != o.q_)
      throw std::invalid_argument("FieldElement: operands from different fields");
  }

  std::uint64_t v_;
  std::uint64_t q_;
};

}  // namespace gsa

#endif  // GSA_FIELD_HPP_
