// Copyright 2026 The qfcodes Authors.
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

// Exact arithmetic in F_p and F_{p^m} (odd p), together with the trace map
// to F_p, the quadratic character of F_p and the v(.) weight function used
// by the point-count formulas.
//
// Elements of F_{p^m} are coordinate vectors in the polynomial basis
// 1, x, ..., x^{m-1}. The canonical integer encoding of an element is the
// base-p number whose least significant digit is coords[0]; every ordering
// in this library (defining sets, enumeration, serialization) uses it.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace qfc::gf {

using Digit = std::uint32_t;

// An element of the prime field, always reduced into [0, p).
struct PrimeElem {
  Digit value = 0;

  friend auto operator<=>(const PrimeElem&, const PrimeElem&) = default;
};

// An element of F_{p^m}; coords has exactly m entries in [0, p).
struct FFElem {
  std::vector<Digit> coords;

  friend bool operator==(const FFElem&, const FFElem&) = default;
};

bool is_prime(std::uint64_t n);

// Inverse of a modulo the prime p via extended Euclid. a must be nonzero.
Digit inv_mod(Digit a, Digit p);

// Polynomial helpers over F_p. Coefficient vectors are constant term first
// and carry no trailing zeros except for the zero polynomial, which is empty.
namespace poly {

using Poly = std::vector<Digit>;

void trim(Poly& f);
Poly mul(const Poly& a, const Poly& b, Digit p);
// Remainder of a modulo the nonzero polynomial b.
Poly mod(const Poly& a, const Poly& b, Digit p);
Poly gcd(Poly a, Poly b, Digit p);
// Rabin's test for a monic polynomial of degree >= 1.
bool is_irreducible(const Poly& f, Digit p);

}  // namespace poly

// The arithmetic context for F_{p^m}. Immutable once constructed.
class FieldCtx {
 public:
  // Validates p (odd prime), m >= 1 and the modulus (monic, degree m,
  // irreducible). Without an explicit modulus the lexicographically smallest
  // monic irreducible of degree m is chosen, comparing coefficients constant
  // term first.
  static FieldCtx make(std::uint64_t p, int m,
                       std::optional<std::vector<Digit>> modulus = std::nullopt);

  Digit p() const { return p_; }
  int m() const { return m_; }
  // Monic modulus, constant term first, length m + 1.
  const std::vector<Digit>& modulus() const { return modulus_; }
  // Number of field elements, p^m.
  std::uint64_t size() const { return size_; }

  FFElem zero() const;
  FFElem one() const;
  // The prime-field constant c embedded in F_{p^m}.
  FFElem constant(PrimeElem c) const;
  // The i-th polynomial basis element x^i, 0 <= i < m.
  FFElem basis(int i) const;

  std::uint64_t encode(const FFElem& a) const;
  FFElem decode(std::uint64_t code) const;

  FFElem add(const FFElem& a, const FFElem& b) const;
  FFElem sub(const FFElem& a, const FFElem& b) const;
  FFElem neg(const FFElem& a) const;
  FFElem scale(PrimeElem c, const FFElem& a) const;
  FFElem mul(const FFElem& a, const FFElem& b) const;
  // Throws kDivisionByZero for a == 0.
  FFElem inv(const FFElem& a) const;
  FFElem pow(const FFElem& a, std::uint64_t e) const;
  bool is_zero(const FFElem& a) const;

  // Absolute trace sum_{i<m} a^{p^i}, which always lies in F_p.
  PrimeElem trace(const FFElem& a) const;

  // Prime-field helpers.
  PrimeElem prime(std::int64_t v) const;
  PrimeElem padd(PrimeElem a, PrimeElem b) const;
  PrimeElem psub(PrimeElem a, PrimeElem b) const;
  PrimeElem pmul(PrimeElem a, PrimeElem b) const;
  PrimeElem pinv(PrimeElem a) const;
  // 1 for nonzero squares, -1 for nonsquares, 0 at 0.
  int quad_char(PrimeElem c) const;
  // p - 1 at 0 and -1 elsewhere.
  int v_func(PrimeElem c) const;

  friend bool operator==(const FieldCtx& a, const FieldCtx& b) {
    return a.p_ == b.p_ && a.modulus_ == b.modulus_;
  }

 private:
  FieldCtx(Digit p, int m, std::vector<Digit> modulus);

  Digit p_;
  int m_;
  std::vector<Digit> modulus_;
  std::uint64_t size_;
};

}  // namespace qfc::gf
