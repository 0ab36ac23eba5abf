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

// Quadratic forms f: F_{p^m} -> F_p.
//
// Two layers live here. GramForm is a quadratic form on the coordinate space
// F_p^n known only through its symmetric Gram matrix A, so f(X) = X^T A X and
// the polarization is F(X, Y) = X^T A Y. All subspace-level invariants
// (radical, dual spaces, restrictions, point counts) are computed on it, which
// lets the same code run on a form over F_{p^m} and on its non-degenerate
// quotient. QuadraticForm adds the field-side description
// f(x) = Tr(sum c_i x^{e_i}) and derives its Gram matrix from the polarization
// identity F(X, Y) = (f(X + Y) - f(X) - f(Y)) / 2.
//
// Discriminants are carried as square classes only; the representative
// depends on the diagonalizing basis but its quadratic character does not.

#include <cstdint>
#include <span>
#include <vector>

#include "qfc/gf.hpp"
#include "qfc/subspaces.hpp"

namespace qfc::qform {

using gf::FFElem;
using gf::FieldCtx;
using gf::PrimeElem;

enum class SquareClass { kSquare, kNonsquare };

// Which usable index the congruence diagonalization picks next. Both orders
// must give the same rank and square class.
enum class PivotOrder { kFirst, kLast };

struct Diagonalization {
  // Nonzero diagonal entries in the order they were produced.
  std::vector<Digit> diagonal;
  int rank = 0;
  // Class of the product of the nonzero entries; kSquare when rank is 0.
  SquareClass disc_class = SquareClass::kSquare;
};

// Symmetric congruence diagonalization of a symmetric matrix over odd F_p.
Diagonalization diagonalize(const MatrixFp& gram, PivotOrder order = PivotOrder::kFirst);

int quad_char(Digit c, Digit p);
int sign_of(SquareClass c);

class GramForm {
 public:
  // gram must be square and symmetric.
  explicit GramForm(MatrixFp gram);

  const MatrixFp& gram() const { return gram_; }
  int dim() const { return gram_.rows(); }
  Digit p() const { return gram_.p(); }

  int rank() const { return rank_; }
  int radical_dim() const { return dim() - rank_; }
  SquareClass disc_class() const { return disc_class_; }
  // Quadratic character of the discriminant, +1 or -1.
  int sign() const { return sign_of(disc_class_); }
  bool nondegenerate() const { return rank_ == dim(); }

  Digit evaluate(std::span<const Digit> x) const;
  Digit bilinear(std::span<const Digit> x, std::span<const Digit> y) const;

 private:
  MatrixFp gram_;
  int rank_ = 0;
  SquareClass disc_class_ = SquareClass::kSquare;
};

struct RestrictedForm {
  Subspace subspace;
  int rank = 0;
  SquareClass disc_class = SquareClass::kSquare;
  // quad_char of the discriminant of the non-degenerate part; never 0.
  int sign_factor = 1;
  int radical_dim = 0;
};

// The radical {x : F(x, y) = 0 for all y}.
Subspace radical(const GramForm& f);
// H^perp = {x : F(x, y) = 0 for all y in H}.
Subspace dual_space(const GramForm& f, const Subspace& h);
// f restricted to H, described in H's echelon basis.
RestrictedForm restrict_to(const GramForm& f, const Subspace& h);

// |H intersect {x : f(x) = a}| from rank and discriminant of f|_H alone.
// Throws kZeroDimSubspace for dim H = 0.
std::uint64_t count_points(const GramForm& f, const Subspace& h, PrimeElem a);

// For non-degenerate f: checks
//   quad_char(D_H) * quad_char(D_{H^perp}) == (-1)^{e (p-1)/2} * sign(f)
// with e = dim(H cap H^perp). Throws kDegenerateAmbient otherwise.
bool disc_product_check(const GramForm& f, const Subspace& h);

// F_p^m / radical, realized on the coordinates chosen as the section.
struct Quotient {
  Subspace radical;
  // Coordinates j whose unit vectors e_j complete the radical to a basis,
  // chosen greedily from j = 0 upward.
  std::vector<int> section;
  // m x (m - l) matrix P with phi(x) = x P.
  MatrixFp projection;
  // The induced form, non-degenerate.
  GramForm form;

  std::vector<Digit> project(std::span<const Digit> x) const;
  Subspace image(const Subspace& h) const;
  // The section vector sum y_i e_{section[i]}.
  std::vector<Digit> lift(std::span<const Digit> y) const;
};

Quotient quotient(const GramForm& f);

struct Term {
  FFElem coefficient;
  std::uint64_t exponent = 1;
};

class QuadraticForm {
 public:
  // Builds f(x) = Tr(sum c_i x^{e_i}) and validates that it is a quadratic
  // form. Throws kNotAQuadraticForm when it is not.
  static QuadraticForm from_terms(FieldCtx ctx, std::vector<Term> terms);

  const FieldCtx& ctx() const { return ctx_; }
  const std::vector<Term>& terms() const { return terms_; }
  const GramForm& gram_form() const { return gram_form_; }
  const MatrixFp& gram() const { return gram_form_.gram(); }

  int rank() const { return gram_form_.rank(); }
  int radical_dim() const { return gram_form_.radical_dim(); }
  SquareClass disc_class() const { return gram_form_.disc_class(); }
  int sign() const { return gram_form_.sign(); }

  // Direct evaluation Tr(sum c_i x^{e_i}).
  PrimeElem evaluate(const FFElem& x) const;
  // (f(x + y) - f(x) - f(y)) / 2.
  PrimeElem polarize(const FFElem& x, const FFElem& y) const;

 private:
  QuadraticForm(FieldCtx ctx, std::vector<Term> terms, GramForm gram_form)
      : ctx_(std::move(ctx)), terms_(std::move(terms)), gram_form_(std::move(gram_form)) {}

  FieldCtx ctx_;
  std::vector<Term> terms_;
  GramForm gram_form_;
};

inline Subspace radical(const QuadraticForm& f) { return radical(f.gram_form()); }
inline Subspace dual_space(const QuadraticForm& f, const Subspace& h) {
  return dual_space(f.gram_form(), h);
}
inline RestrictedForm restrict_to(const QuadraticForm& f, const Subspace& h) {
  return restrict_to(f.gram_form(), h);
}
inline std::uint64_t count_points(const QuadraticForm& f, const Subspace& h, PrimeElem a) {
  return count_points(f.gram_form(), h, a);
}
inline Quotient quotient(const QuadraticForm& f) { return quotient(f.gram_form()); }

}  // namespace qfc::qform
