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

#include "qfc/gf.hpp"

#include <limits>
#include <tuple>
#include <string>
#include <utility>

#include "qfc/error.hpp"

namespace qfc {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNotPrime: return "NotPrime";
    case ErrorKind::kEvenCharacteristic: return "EvenCharacteristic";
    case ErrorKind::kReducible: return "Reducible";
    case ErrorKind::kBadDegree: return "BadDegree";
    case ErrorKind::kDivisionByZero: return "DivisionByZero";
    case ErrorKind::kDimOutOfRange: return "DimOutOfRange";
    case ErrorKind::kNotAQuadraticForm: return "NotAQuadraticForm";
    case ErrorKind::kZeroDimSubspace: return "ZeroDimSubspace";
    case ErrorKind::kDegenerateAmbient: return "DegenerateAmbient";
    case ErrorKind::kEmptyDefiningSet: return "EmptyDefiningSet";
    case ErrorKind::kTooLarge: return "TooLarge";
    case ErrorKind::kDegenerateCode: return "DegenerateCode";
    case ErrorKind::kAZeroOutOfScope: return "AZeroOutOfScope";
    case ErrorKind::kRankZero: return "RankZero";
    case ErrorKind::kDimensionDeficit: return "DimensionDeficit";
    case ErrorKind::kBudgetExceeded: return "BudgetExceeded";
    case ErrorKind::kParse: return "ParseError";
  }
  return "Unknown";
}

}  // namespace qfc

namespace qfc::gf {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Digit inv_mod(Digit a, Digit p) {
  std::int64_t r0 = p, r1 = a % p;
  std::int64_t t0 = 0, t1 = 1;
  if (r1 == 0) throw Error(ErrorKind::kDivisionByZero, "inverse of 0 mod " + std::to_string(p));
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(t0, t1) = std::pair{t1, t0 - q * t1};
  }
  t0 %= static_cast<std::int64_t>(p);
  if (t0 < 0) t0 += p;
  return static_cast<Digit>(t0);
}

namespace poly {

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly mul(const Poly& a, const Poly& b, Digit p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<Digit>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  trim(r);
  return r;
}

Poly mod(const Poly& a, const Poly& b, Digit p) {
  Poly r = a;
  trim(r);
  Poly d = b;
  trim(d);
  if (d.empty()) throw Error(ErrorKind::kDivisionByZero, "polynomial modulo zero");
  const Digit lead_inv = inv_mod(d.back(), p);
  while (r.size() >= d.size()) {
    const std::size_t shift = r.size() - d.size();
    const std::uint64_t c = std::uint64_t{r.back()} * lead_inv % p;
    for (std::size_t i = 0; i < d.size(); ++i) {
      const std::uint64_t sub = c * d[i] % p;
      r[shift + i] = static_cast<Digit>((r[shift + i] + p - sub) % p);
    }
    trim(r);
  }
  return r;
}

Poly gcd(Poly a, Poly b, Digit p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::uint64_t inv = inv_mod(a.back(), p);
    for (auto& c : a) c = static_cast<Digit>(c * inv % p);
  }
  return a;
}

namespace {

// x^{p^k} mod f, computed by k successive p-th powers.
Poly frobenius_power_of_x(const Poly& f, Digit p, int k) {
  Poly acc = mod(Poly{0, 1}, f, p);
  for (int step = 0; step < k; ++step) {
    Poly result{1};
    Poly base = acc;
    for (std::uint64_t e = p; e > 0; e >>= 1) {
      if (e & 1) result = mod(mul(result, base, p), f, p);
      base = mod(mul(base, base, p), f, p);
    }
    acc = std::move(result);
  }
  return acc;
}

Poly sub(Poly a, const Poly& b, Digit p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

}  // namespace

bool is_irreducible(const Poly& f, Digit p) {
  Poly g = f;
  trim(g);
  if (g.size() < 2) return false;
  const int n = static_cast<int>(g.size()) - 1;
  // x reduced mod g, so that g = x itself is handled
  const Poly x = mod(Poly{0, 1}, g, p);
  if (!sub(frobenius_power_of_x(g, p, n), x, p).empty()) return false;
  for (int q = 2; q <= n; ++q) {
    if (n % q != 0 || !is_prime(static_cast<std::uint64_t>(q))) continue;
    const Poly h = sub(frobenius_power_of_x(g, p, n / q), x, p);
    if (gcd(h, g, p).size() != 1) return false;
  }
  return true;
}

}  // namespace poly

FieldCtx FieldCtx::make(std::uint64_t p, int m, std::optional<std::vector<Digit>> modulus) {
  if (!is_prime(p)) throw Error(ErrorKind::kNotPrime, std::to_string(p) + " is not prime");
  if (p == 2) throw Error(ErrorKind::kEvenCharacteristic, "characteristic 2 is not supported");
  if (p > (1u << 15)) throw Error(ErrorKind::kBadDegree, "prime too large for this arithmetic");
  if (m < 1) throw Error(ErrorKind::kBadDegree, "extension degree must be at least 1");
  std::uint64_t size = 1;
  for (int i = 0; i < m; ++i) {
    if (size > std::numeric_limits<std::uint64_t>::max() / 4 / p) {
      throw Error(ErrorKind::kBadDegree, "field too large to encode");
    }
    size *= p;
  }
  const auto dp = static_cast<Digit>(p);

  if (modulus) {
    auto& g = *modulus;
    if (g.size() != static_cast<std::size_t>(m) + 1 || g.back() != 1) {
      throw Error(ErrorKind::kBadDegree,
                  "modulus must be monic of degree " + std::to_string(m));
    }
    for (const Digit c : g) {
      if (c >= dp) throw Error(ErrorKind::kBadDegree, "modulus coefficient out of range");
    }
    if (!poly::is_irreducible(g, dp)) {
      throw Error(ErrorKind::kReducible, "modulus is reducible over F_" + std::to_string(p));
    }
    return FieldCtx(dp, m, g);
  }

  // Constant-first lexicographic order: c_0 is the most significant digit of
  // the scan counter.
  std::vector<Digit> g(static_cast<std::size_t>(m) + 1, 0);
  g[m] = 1;
  for (std::uint64_t k = 0; k < size; ++k) {
    std::uint64_t t = k;
    for (int i = m - 1; i >= 0; --i) {
      g[i] = static_cast<Digit>(t % p);
      t /= p;
    }
    if (poly::is_irreducible(g, dp)) return FieldCtx(dp, m, g);
  }
  throw Error(ErrorKind::kReducible, "no irreducible polynomial found");
}

FieldCtx::FieldCtx(Digit p, int m, std::vector<Digit> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)), size_(1) {
  for (int i = 0; i < m_; ++i) size_ *= p_;
}

FFElem FieldCtx::zero() const { return FFElem{std::vector<Digit>(m_, 0)}; }

FFElem FieldCtx::one() const { return constant(PrimeElem{1}); }

FFElem FieldCtx::constant(PrimeElem c) const {
  FFElem r = zero();
  r.coords[0] = c.value % p_;
  return r;
}

FFElem FieldCtx::basis(int i) const {
  FFElem r = zero();
  r.coords.at(i) = 1;
  return r;
}

std::uint64_t FieldCtx::encode(const FFElem& a) const {
  std::uint64_t code = 0;
  for (int i = m_ - 1; i >= 0; --i) code = code * p_ + a.coords[i];
  return code;
}

FFElem FieldCtx::decode(std::uint64_t code) const {
  FFElem r = zero();
  for (int i = 0; i < m_; ++i) {
    r.coords[i] = static_cast<Digit>(code % p_);
    code /= p_;
  }
  return r;
}

FFElem FieldCtx::add(const FFElem& a, const FFElem& b) const {
  FFElem r = a;
  for (int i = 0; i < m_; ++i) {
    r.coords[i] += b.coords[i];
    if (r.coords[i] >= p_) r.coords[i] -= p_;
  }
  return r;
}

FFElem FieldCtx::sub(const FFElem& a, const FFElem& b) const { return add(a, neg(b)); }

FFElem FieldCtx::neg(const FFElem& a) const {
  FFElem r = a;
  for (auto& c : r.coords) c = (p_ - c) % p_;
  return r;
}

FFElem FieldCtx::scale(PrimeElem c, const FFElem& a) const {
  FFElem r = a;
  for (auto& x : r.coords) x = static_cast<Digit>(std::uint64_t{x} * c.value % p_);
  return r;
}

FFElem FieldCtx::mul(const FFElem& a, const FFElem& b) const {
  // Schoolbook product followed by reduction with the monic modulus.
  std::vector<std::uint64_t> prod(2 * m_ - 1, 0);
  for (int i = 0; i < m_; ++i) {
    if (a.coords[i] == 0) continue;
    for (int j = 0; j < m_; ++j) {
      prod[i + j] = (prod[i + j] + std::uint64_t{a.coords[i]} * b.coords[j]) % p_;
    }
  }
  for (int k = 2 * m_ - 2; k >= m_; --k) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    for (int t = 0; t <= m_; ++t) {
      const std::uint64_t sub = c * modulus_[t] % p_;
      prod[k - m_ + t] = (prod[k - m_ + t] + p_ - sub) % p_;
    }
  }
  FFElem r = zero();
  for (int i = 0; i < m_; ++i) r.coords[i] = static_cast<Digit>(prod[i]);
  return r;
}

FFElem FieldCtx::inv(const FFElem& a) const {
  if (is_zero(a)) throw Error(ErrorKind::kDivisionByZero, "inverse of zero field element");
  // a^{p^m - 2}
  return pow(a, size_ - 2);
}

FFElem FieldCtx::pow(const FFElem& a, std::uint64_t e) const {
  FFElem result = one();
  FFElem base = a;
  for (; e > 0; e >>= 1) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

bool FieldCtx::is_zero(const FFElem& a) const {
  for (const Digit c : a.coords) {
    if (c != 0) return false;
  }
  return true;
}

PrimeElem FieldCtx::trace(const FFElem& a) const {
  FFElem acc = zero();
  FFElem conj = a;
  for (int i = 0; i < m_; ++i) {
    acc = add(acc, conj);
    conj = pow(conj, p_);
  }
  // acc is fixed by Frobenius, so only the constant coordinate is nonzero.
  return PrimeElem{acc.coords[0]};
}

PrimeElem FieldCtx::prime(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return PrimeElem{static_cast<Digit>(r)};
}

PrimeElem FieldCtx::padd(PrimeElem a, PrimeElem b) const {
  return PrimeElem{(a.value + b.value) % p_};
}

PrimeElem FieldCtx::psub(PrimeElem a, PrimeElem b) const {
  return PrimeElem{(a.value + p_ - b.value) % p_};
}

PrimeElem FieldCtx::pmul(PrimeElem a, PrimeElem b) const {
  return PrimeElem{static_cast<Digit>(std::uint64_t{a.value} * b.value % p_)};
}

PrimeElem FieldCtx::pinv(PrimeElem a) const { return PrimeElem{inv_mod(a.value, p_)}; }

int FieldCtx::quad_char(PrimeElem c) const {
  if (c.value % p_ == 0) return 0;
  // Euler's criterion.
  std::uint64_t result = 1, base = c.value % p_;
  for (std::uint64_t e = (p_ - 1) / 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
  }
  return result == 1 ? 1 : -1;
}

int FieldCtx::v_func(PrimeElem c) const {
  return c.value % p_ == 0 ? static_cast<int>(p_) - 1 : -1;
}

}  // namespace qfc::gf
