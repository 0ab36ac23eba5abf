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

#include "qfc/qform.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "qfc/error.hpp"

namespace qfc::qform {

int quad_char(Digit c, Digit p) {
  c %= p;
  if (c == 0) return 0;
  std::uint64_t result = 1, base = c;
  for (std::uint64_t e = (p - 1) / 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return result == 1 ? 1 : -1;
}

int sign_of(SquareClass c) { return c == SquareClass::kSquare ? 1 : -1; }

Diagonalization diagonalize(const MatrixFp& gram, PivotOrder order) {
  if (!gram.is_symmetric()) throw std::invalid_argument("diagonalize: matrix is not symmetric");
  const Digit p = gram.p();
  MatrixFp a = gram;
  std::vector<int> active(a.rows());
  for (int i = 0; i < a.rows(); ++i) active[i] = i;
  if (order == PivotOrder::kLast) std::ranges::reverse(active);

  // Row/column operations v_k <- v_k + c v_j applied symmetrically.
  auto add_multiple = [&](int k, int j, std::uint64_t c) {
    for (int t = 0; t < a.cols(); ++t) a(k, t) = static_cast<Digit>((a(k, t) + c * a(j, t)) % p);
    for (int t = 0; t < a.rows(); ++t) a(t, k) = static_cast<Digit>((a(t, k) + c * a(t, j)) % p);
  };

  Diagonalization out;
  std::uint64_t product = 1;
  while (!active.empty()) {
    auto it = std::ranges::find_if(active, [&](int i) { return a(i, i) != 0; });
    if (it == active.end()) {
      // Every remaining diagonal entry vanishes. If some F(v_i, v_j) != 0,
      // v_i + v_j has f-value 2 F(v_i, v_j) != 0 since p is odd.
      bool repaired = false;
      for (std::size_t x = 0; x < active.size() && !repaired; ++x) {
        for (std::size_t y = 0; y < active.size() && !repaired; ++y) {
          if (x != y && a(active[x], active[y]) != 0) {
            add_multiple(active[x], active[y], 1);
            it = active.begin() + static_cast<std::ptrdiff_t>(x);
            repaired = true;
          }
        }
      }
      if (!repaired) break;
    }
    const int i = *it;
    active.erase(it);
    const Digit d = a(i, i);
    const std::uint64_t d_inv = gf::inv_mod(d, p);
    for (const int k : active) {
      if (a(k, i) == 0) continue;
      const std::uint64_t c = (p - a(k, i)) * d_inv % p;
      add_multiple(k, i, c);
    }
    out.diagonal.push_back(d);
    product = product * d % p;
  }
  out.rank = static_cast<int>(out.diagonal.size());
  out.disc_class = quad_char(static_cast<Digit>(product), p) == 1 ? SquareClass::kSquare
                                                                  : SquareClass::kNonsquare;
  return out;
}

GramForm::GramForm(MatrixFp gram) : gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols() || !gram_.is_symmetric()) {
    throw std::invalid_argument("GramForm: Gram matrix must be square and symmetric");
  }
  const auto diag = diagonalize(gram_);
  rank_ = diag.rank;
  disc_class_ = diag.disc_class;
}

Digit GramForm::bilinear(std::span<const Digit> x, std::span<const Digit> y) const {
  const Digit p = gram_.p();
  const auto xa = row_times(x, gram_);
  std::uint64_t acc = 0;
  for (int j = 0; j < dim(); ++j) acc = (acc + std::uint64_t{xa[j]} * y[j]) % p;
  return static_cast<Digit>(acc);
}

Digit GramForm::evaluate(std::span<const Digit> x) const { return bilinear(x, x); }

Subspace radical(const GramForm& f) { return null_space(f.gram()); }

Subspace dual_space(const GramForm& f, const Subspace& h) {
  if (h.dim() == 0) return Subspace::full(f.dim(), f.p());
  // x is orthogonal to H iff (B A) x^T = 0 for the basis matrix B of H.
  return null_space(h.basis() * f.gram());
}

RestrictedForm restrict_to(const GramForm& f, const Subspace& h) {
  const MatrixFp& b = h.basis();
  const MatrixFp g = b * f.gram() * b.transpose();
  const auto diag = diagonalize(g);
  RestrictedForm out{h, diag.rank, diag.disc_class, sign_of(diag.disc_class), 0};
  out.radical_dim = intersect(h, dual_space(f, h)).dim();
  if (out.rank != h.dim() - out.radical_dim) {
    throw std::logic_error("restrict_to: rank of f|H disagrees with dim(H cap H^perp)");
  }
  return out;
}

namespace {

std::int64_t ipow(std::int64_t base, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

std::uint64_t count_points(const GramForm& f, const Subspace& h, PrimeElem a) {
  const int d = h.dim();
  if (d == 0) throw Error(ErrorKind::kZeroDimSubspace, "point count needs dim H > 0");
  const Digit p = f.p();
  const auto rf = restrict_to(f, h);
  const int rk = rf.rank;
  const int eta_minus_one = quad_char(p - 1, p);
  const std::int64_t pp = p;
  std::int64_t count = ipow(pp, d - 1);
  if (rk % 2 == 0) {
    // p^{d-1} + v(a) eta((-1)^{R/2} D) p^{d - (R+2)/2}
    const int v = a.value % p == 0 ? static_cast<int>(p) - 1 : -1;
    const int chi = (rk / 2 % 2 == 0 ? 1 : eta_minus_one) * rf.sign_factor;
    count += v * chi * ipow(pp, d - (rk + 2) / 2);
  } else {
    // p^{d-1} + eta((-1)^{(R-1)/2} a D) p^{d - (R+1)/2}
    const int chi = ((rk - 1) / 2 % 2 == 0 ? 1 : eta_minus_one) * quad_char(a.value, p) *
                    rf.sign_factor;
    count += chi * ipow(pp, d - (rk + 1) / 2);
  }
  return static_cast<std::uint64_t>(count);
}

bool disc_product_check(const GramForm& f, const Subspace& h) {
  if (!f.nondegenerate()) {
    throw Error(ErrorKind::kDegenerateAmbient, "discriminant product identity needs a non-degenerate form");
  }
  const Digit p = f.p();
  const Subspace h_perp = dual_space(f, h);
  const int e = intersect(h, h_perp).dim();
  const int lhs = restrict_to(f, h).sign_factor * restrict_to(f, h_perp).sign_factor;
  const int rhs = ((e * (p - 1) / 2) % 2 == 0 ? 1 : -1) * f.sign();
  return lhs == rhs;
}

std::vector<Digit> Quotient::project(std::span<const Digit> x) const {
  return row_times(x, projection);
}

Subspace Quotient::image(const Subspace& h) const {
  const int mbar = static_cast<int>(section.size());
  if (h.dim() == 0) return Subspace::zero(mbar, projection.p());
  return Subspace::row_space(h.basis() * projection);
}

std::vector<Digit> Quotient::lift(std::span<const Digit> y) const {
  std::vector<Digit> x(projection.rows(), 0);
  for (std::size_t i = 0; i < section.size(); ++i) x[section[i]] = y[i];
  return x;
}

Quotient quotient(const GramForm& f) {
  const int m = f.dim();
  const Digit p = f.p();
  Subspace rad = radical(f);
  // Greedy completion: keep e_j whenever it is independent of what we have.
  std::vector<int> section;
  Subspace acc = rad;
  for (int j = 0; j < m && acc.dim() < m; ++j) {
    std::vector<Digit> e(m, 0);
    e[j] = 1;
    if (acc.contains(e)) continue;
    section.push_back(j);
    acc = sum(acc, Subspace::span(m, p, {e}));
  }
  const int l = rad.dim();
  const int mbar = m - l;

  // T has rows [radical basis; e_section]; x = y T, so y = x T^{-1} and phi
  // keeps the trailing m - l coordinates of y.
  MatrixFp t(m, m, p);
  for (int r = 0; r < l; ++r) std::ranges::copy(rad.basis().row(r), t.row(r).begin());
  for (int i = 0; i < mbar; ++i) t(l + i, section[i]) = 1;
  const auto t_inv = inverse(t);
  if (!t_inv) throw std::logic_error("quotient: section does not complete the radical");
  MatrixFp proj(m, mbar, p);
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < mbar; ++c) proj(r, c) = (*t_inv)(r, l + c);
  }

  MatrixFp g(mbar, mbar, p);
  for (int i = 0; i < mbar; ++i) {
    for (int j = 0; j < mbar; ++j) g(i, j) = f.gram()(section[i], section[j]);
  }
  return Quotient{std::move(rad), std::move(section), std::move(proj), GramForm(std::move(g))};
}

QuadraticForm QuadraticForm::from_terms(FieldCtx ctx, std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (t.exponent == 0) throw Error(ErrorKind::kNotAQuadraticForm, "exponents must be positive");
    if (t.coefficient.coords.size() != static_cast<std::size_t>(ctx.m())) {
      throw std::invalid_argument("term coefficient does not belong to the field");
    }
  }
  const int m = ctx.m();
  const Digit p = ctx.p();

  auto eval = [&](const FFElem& x) {
    FFElem s = ctx.zero();
    for (const auto& t : terms) s = ctx.add(s, ctx.mul(t.coefficient, ctx.pow(x, t.exponent)));
    return ctx.trace(s);
  };
  const PrimeElem half = ctx.pinv(PrimeElem{2});
  auto polar = [&](const FFElem& x, const FFElem& y) {
    const PrimeElem raw = ctx.psub(ctx.psub(eval(ctx.add(x, y)), eval(x)), eval(y));
    return ctx.pmul(half, raw);
  };

  MatrixFp gram(m, m, p);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      gram(i, j) = i == j ? eval(ctx.basis(i)).value : polar(ctx.basis(i), ctx.basis(j)).value;
    }
  }

  auto reject = [](const std::string& why) {
    throw Error(ErrorKind::kNotAQuadraticForm, why);
  };
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (gram(i, j) != gram(j, i)) reject("polarization is not symmetric");
      for (int k = 0; k < m; ++k) {
        const PrimeElem lhs = polar(ctx.add(ctx.basis(i), ctx.basis(j)), ctx.basis(k));
        const PrimeElem rhs = ctx.padd(polar(ctx.basis(i), ctx.basis(k)), polar(ctx.basis(j), ctx.basis(k)));
        if (lhs != rhs) reject("polarization is not bilinear on the basis");
      }
    }
    const PrimeElem fi = eval(ctx.basis(i));
    for (Digit lambda = 0; lambda < p; ++lambda) {
      const PrimeElem l{lambda};
      if (eval(ctx.scale(l, ctx.basis(i))) != ctx.pmul(ctx.pmul(l, l), fi)) {
        reject("f(lambda x) != lambda^2 f(x) on a basis vector");
      }
    }
  }

  GramForm gf(gram);
  // At desk scale the identity f(X) = X^T A X is checked on every element;
  // basis checks alone cannot exclude higher-degree terms.
  constexpr std::uint64_t kFullCheckLimit = std::uint64_t{1} << 16;
  if (ctx.size() <= kFullCheckLimit) {
    for (std::uint64_t code = 0; code < ctx.size(); ++code) {
      const FFElem x = ctx.decode(code);
      if (eval(x).value != gf.evaluate(x.coords)) reject("f(X) != X^T A X for some X");
    }
  }
  return QuadraticForm(std::move(ctx), std::move(terms), std::move(gf));
}

PrimeElem QuadraticForm::evaluate(const FFElem& x) const {
  FFElem s = ctx_.zero();
  for (const auto& t : terms_) s = ctx_.add(s, ctx_.mul(t.coefficient, ctx_.pow(x, t.exponent)));
  return ctx_.trace(s);
}

PrimeElem QuadraticForm::polarize(const FFElem& x, const FFElem& y) const {
  const PrimeElem raw =
      ctx_.psub(ctx_.psub(evaluate(ctx_.add(x, y)), evaluate(x)), evaluate(y));
  return ctx_.pmul(ctx_.pinv(PrimeElem{2}), raw);
}

}  // namespace qfc::qform
