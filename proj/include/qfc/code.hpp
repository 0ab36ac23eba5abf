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

// Trace codes C_D = {(Tr(x d_1), ..., Tr(x d_n)) : x in F_{p^m}} for the
// defining set D_a = {x != 0 : f(x) = a} of a quadratic form f.

#include <cstdint>
#include <string>
#include <vector>

#include "qfc/gf.hpp"
#include "qfc/kernels.hpp"
#include "qfc/qform.hpp"
#include "qfc/subspaces.hpp"

namespace qfc::code {

using gf::FFElem;
using gf::FieldCtx;
using gf::PrimeElem;

struct DefiningSet {
  PrimeElem a;
  // Ascending canonical encoding.
  std::vector<FFElem> elements;
  std::vector<std::uint64_t> codes;
};

// Ambient spaces larger than this are refused by the exhaustive routines.
inline constexpr std::uint64_t kMaxEnumerableField = 729;  // 3^6

class TraceCode {
 public:
  const FieldCtx& ctx() const { return ctx_; }
  const DefiningSet& defining_set() const { return d_; }
  // m x n; row i is (Tr(x^i d_1), ..., Tr(x^i d_n)).
  const MatrixFp& generator() const { return gen_; }
  int length() const { return gen_.cols(); }
  int dim() const { return dim_; }
  // Independent rows spanning the code: the generator itself when dim == m,
  // its nonzero echelon rows otherwise.
  const MatrixFp& basis() const { return basis_; }
  // Table over encodings of F_p^m: 1 iff the element lies in D.
  const std::vector<std::uint8_t>& membership() const { return membership_; }

 private:
  friend TraceCode build_code(const qform::QuadraticForm& f, PrimeElem a);
  TraceCode(FieldCtx ctx, DefiningSet d, MatrixFp gen, int dim, MatrixFp basis,
            std::vector<std::uint8_t> membership)
      : ctx_(std::move(ctx)), d_(std::move(d)), gen_(std::move(gen)), dim_(dim),
        basis_(std::move(basis)), membership_(std::move(membership)) {}

  FieldCtx ctx_;
  DefiningSet d_;
  MatrixFp gen_;
  int dim_;
  MatrixFp basis_;
  std::vector<std::uint8_t> membership_;
};

// Throws kEmptyDefiningSet when no nonzero x has f(x) = a, and kTooLarge
// when the field exceeds kMaxEnumerableField.
TraceCode build_code(const qform::QuadraticForm& f, PrimeElem a);

std::vector<Digit> codeword(const TraceCode& code, const FFElem& x);
int hamming_weight(std::span<const Digit> word);

struct WeightCount {
  int weight = 0;
  std::uint64_t count = 0;

  friend bool operator==(const WeightCount&, const WeightCount&) = default;
};

// Nonzero entries only, ascending weight, over all p^m messages.
std::vector<WeightCount> weight_distribution(const TraceCode& code,
                                             kernels::ExecPolicy policy = {});

// |Supp(V)| for V the image of the message subspace X. Needs dim == m
// (kDegenerateCode otherwise).
int subcode_support(const TraceCode& code, const Subspace& x);

// JSON record {"p", "m", "modulus", "a", "n", "dim", "defining_set",
// "generator"} with elements given by their encodings.
std::string serialize(const TraceCode& code);

}  // namespace qfc::code
