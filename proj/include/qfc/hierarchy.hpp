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

// Weight hierarchies of the trace codes C_{D_a}, computed three ways:
//
//  * closed form, from rank, radical dimension and sign of f and the
//    quadratic character of a (a != 0 only);
//  * max-intersection search, d_r = n - max |D cap H| over subspaces H of
//    codimension r in span(D);
//  * subcode search, d_r = min |Supp(V)| over r-dimensional subcodes V.
//
// verify() runs all applicable sources and cross-checks them.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qfc/code.hpp"
#include "qfc/kernels.hpp"
#include "qfc/qform.hpp"

namespace qfc::hierarchy {

using gf::PrimeElem;

enum class Parity { kEven, kOdd };

struct FormProfile {
  Digit p = 0;
  int m = 0;
  int rank = 0;
  int l = 0;
  Parity parity = Parity::kEven;
  // rank = 2s (even) or 2s + 1 (odd).
  int s = 0;
  int sign = 1;
  PrimeElem a;
  // (-1)^{s(p-1)/2} * sign.
  int derived_sign = 1;

  static FormProfile make(Digit p, int m, int rank, int sign, PrimeElem a);
  static FormProfile of(const qform::QuadraticForm& f, PrimeElem a);
};

// Which closed form applies: even rank, or odd rank with quad_char(a) equal
// (kOddMatched) or opposite (kOddOpposed) to the derived sign.
enum class Branch { kEven, kOddMatched, kOddOpposed };

// Throws kAZeroOutOfScope for a = 0 and kRankZero for rank 0.
Branch dispatch(const FormProfile& profile);

// d_1, ..., d_m.
std::vector<std::int64_t> closed_form(const FormProfile& profile);

struct OracleBudget {
  std::uint64_t max_field = code::kMaxEnumerableField;
  // Upper bound on the number of subspaces one oracle call may enumerate.
  std::uint64_t max_subspaces = 1'000'000;
};

// n - max |D cap H| over the (dim - r)-dimensional subspaces H of span(D).
// When dim == m this is the full space and the search is the classical
// subspace-intersection formula. Throws kDimensionDeficit for r > dim and
// kBudgetExceeded when the search would exceed the budget.
std::int64_t oracle_intersection(const code::TraceCode& code, int r,
                                 kernels::ExecPolicy policy = {}, OracleBudget budget = {});

// min |Supp(V)| over r-dimensional subcodes V. Same errors.
std::int64_t oracle_definition(const code::TraceCode& code, int r,
                               kernels::ExecPolicy policy = {}, OracleBudget budget = {});

enum class Source { kClosed, kIntersection, kDefinition };
std::string_view tag(Source s);

struct HierarchyRow {
  int r = 0;
  std::optional<std::int64_t> closed;
  std::optional<std::int64_t> intersection;
  std::optional<std::int64_t> definition;
  bool agree = true;
};

enum class Status { kVerified, kFailed };
std::string_view to_string(Status s);

struct HierarchyReport {
  FormProfile profile;
  int n = 0;
  int dim = 0;
  std::vector<HierarchyRow> rows;
  // False when a = 0, rank 0 or dim < m; closed_note then says why.
  bool closed_in_scope = true;
  std::string closed_note;
  bool strictly_increasing = true;
  bool top_weight_is_length = true;
  std::vector<std::string> problems;
  Status status = Status::kVerified;
};

struct VerifyOptions {
  // Empty means 1..dim.
  std::vector<int> r_set;
  bool run_closed = true;
  bool run_oracles = true;
  kernels::ExecPolicy exec;
  OracleBudget budget;
  // Fault injection: replaces the computed sign before the closed form is
  // evaluated. Used to check that disagreements are caught.
  std::optional<int> sign_override;
};

HierarchyReport verify(const qform::QuadraticForm& f, PrimeElem a, const VerifyOptions& options = {});

}  // namespace qfc::hierarchy
