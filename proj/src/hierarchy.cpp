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

#include "qfc/hierarchy.hpp"

#include <algorithm>
#include <string>

#include "qfc/error.hpp"

namespace qfc::hierarchy {
namespace {

std::int64_t ipow(std::int64_t base, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

int neg_one_pow(int e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

FormProfile FormProfile::make(Digit p, int m, int rank, int sign, PrimeElem a) {
  FormProfile prof;
  prof.p = p;
  prof.m = m;
  prof.rank = rank;
  prof.l = m - rank;
  prof.parity = rank % 2 == 0 ? Parity::kEven : Parity::kOdd;
  prof.s = rank / 2;
  prof.sign = sign;
  prof.a = PrimeElem{a.value % p};
  prof.derived_sign = neg_one_pow(prof.s * static_cast<int>(p - 1) / 2) * sign;
  return prof;
}

FormProfile FormProfile::of(const qform::QuadraticForm& f, PrimeElem a) {
  return make(f.ctx().p(), f.ctx().m(), f.rank(), f.sign(), a);
}

Branch dispatch(const FormProfile& prof) {
  if (prof.a.value == 0) {
    throw Error(ErrorKind::kAZeroOutOfScope, "no closed-form hierarchy is provided for a = 0");
  }
  if (prof.rank == 0) throw Error(ErrorKind::kRankZero, "the zero form has no closed-form hierarchy");
  if (prof.parity == Parity::kEven) return Branch::kEven;
  const int eta_a = qform::quad_char(prof.a.value, prof.p);
  return eta_a == prof.derived_sign ? Branch::kOddMatched : Branch::kOddOpposed;
}

std::vector<std::int64_t> closed_form(const FormProfile& prof) {
  const Branch branch = dispatch(prof);
  const std::int64_t p = prof.p;
  const int m = prof.m;
  const int s = prof.s;
  const int l = prof.l;
  const std::int64_t eps = prof.derived_sign;
  const std::int64_t top = ipow(p, m - 1);
  auto tail = [&](int r) { return ipow(p, m - r - 1); };

  std::vector<std::int64_t> d(m);
  for (int r = 1; r <= m; ++r) {
    std::int64_t v = 0;
    switch (branch) {
      case Branch::kEven:
        if (r <= s) {
          v = top - tail(r) - (eps + 1) * ipow(p, s + l - 1);
        } else if (r < m) {
          v = top - 2 * tail(r) - eps * ipow(p, s + l - 1);
        } else {
          v = top - eps * ipow(p, s + l - 1);
        }
        break;
      case Branch::kOddMatched:
        if (r <= s) {
          v = top - tail(r);
        } else if (r < m) {
          v = top + ipow(p, s + l) - 2 * tail(r);
        } else {
          v = top + ipow(p, s + l);
        }
        break;
      case Branch::kOddOpposed:
        if (r <= s) {
          v = top - tail(r) - ipow(p, s + l) - ipow(p, s + l - 1);
        } else if (r < m) {
          v = top - ipow(p, s + l) - 2 * tail(r);
        } else {
          v = top - ipow(p, s + l);
        }
        break;
    }
    d[r - 1] = v;
  }
  return d;
}

namespace {

void check_oracle_request(const code::TraceCode& code, int r, std::uint64_t subspaces,
                          const OracleBudget& budget) {
  if (r < 1 || r > code.dim()) {
    throw Error(ErrorKind::kDimensionDeficit,
                "r = " + std::to_string(r) + " but the code has dimension " + std::to_string(code.dim()));
  }
  if (code.ctx().size() > budget.max_field) {
    throw Error(ErrorKind::kBudgetExceeded, "ambient space of size " + std::to_string(code.ctx().size()) +
                                                " exceeds the oracle limit " +
                                                std::to_string(budget.max_field));
  }
  if (subspaces > budget.max_subspaces) {
    throw Error(ErrorKind::kBudgetExceeded, std::to_string(subspaces) +
                                                " subspaces exceed the oracle budget of " +
                                                std::to_string(budget.max_subspaces));
  }
}

}  // namespace

std::int64_t oracle_intersection(const code::TraceCode& code, int r, kernels::ExecPolicy policy,
                                 OracleBudget budget) {
  const int k = code.dim();
  const Digit p = code.ctx().p();
  check_oracle_request(code, r, gaussian_binomial(k, k - r, p), budget);

  // span(D) is the full space exactly when dim == m; otherwise H ranges
  // over subspaces of span(D) only.
  const int m = code.ctx().m();
  MatrixFp ambient = MatrixFp::identity(m, p);
  if (k < m) {
    std::vector<std::vector<Digit>> vecs;
    for (const auto& e : code.defining_set().elements) vecs.push_back(e.coords);
    ambient = Subspace::span(m, p, vecs).basis();
  }
  const kernels::IntersectionQuery q{&ambient, k - r, &code.membership()};
  const auto result = kernels::max_intersection(q, policy);
  return static_cast<std::int64_t>(code.length()) - static_cast<std::int64_t>(result.best);
}

std::int64_t oracle_definition(const code::TraceCode& code, int r, kernels::ExecPolicy policy,
                               OracleBudget budget) {
  check_oracle_request(code, r, gaussian_binomial(code.dim(), r, code.ctx().p()), budget);
  return static_cast<std::int64_t>(kernels::min_support(code.basis(), r, policy).best);
}

std::string_view tag(Source s) {
  switch (s) {
    case Source::kClosed: return "closed";
    case Source::kIntersection: return "oracleA";
    case Source::kDefinition: return "oracleB";
  }
  return "?";
}

std::string_view to_string(Status s) { return s == Status::kVerified ? "VERIFIED" : "FAILED"; }

HierarchyReport verify(const qform::QuadraticForm& f, PrimeElem a, const VerifyOptions& options) {
  const auto& ctx = f.ctx();
  a = ctx.prime(a.value);
  HierarchyReport report;
  report.profile = FormProfile::make(ctx.p(), ctx.m(), f.rank(), options.sign_override.value_or(f.sign()), a);

  const code::TraceCode code = code::build_code(f, a);
  report.n = code.length();
  report.dim = code.dim();

  std::vector<std::int64_t> closed;
  if (options.run_closed) {
    try {
      closed = closed_form(report.profile);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kAZeroOutOfScope && e.kind() != ErrorKind::kRankZero) throw;
      report.closed_in_scope = false;
      report.closed_note = e.what();
    }
    // The closed forms describe an m-dimensional code. Small cases exist
    // where D spans a proper subspace; only the oracles apply there.
    if (!closed.empty() && report.dim < ctx.m()) {
      closed.clear();
      report.closed_in_scope = false;
      report.closed_note = "code has dimension " + std::to_string(report.dim) + " < m = " +
                           std::to_string(ctx.m()) + "; closed form not applicable";
    }
  } else {
    report.closed_in_scope = false;
    report.closed_note = "closed form not requested";
  }

  std::vector<int> rs = options.r_set;
  if (rs.empty()) {
    const int top = options.run_oracles ? report.dim : ctx.m();
    for (int r = 1; r <= top; ++r) rs.push_back(r);
  }
  std::ranges::sort(rs);
  rs.erase(std::unique(rs.begin(), rs.end()), rs.end());

  for (const int r : rs) {
    if (r < 1 || r > ctx.m()) {
      throw Error(ErrorKind::kDimOutOfRange, "r = " + std::to_string(r) + " outside [1, m]");
    }
    HierarchyRow row;
    row.r = r;
    if (!closed.empty()) row.closed = closed[r - 1];
    if (options.run_oracles) {
      row.intersection = oracle_intersection(code, r, options.exec, options.budget);
      row.definition = oracle_definition(code, r, options.exec, options.budget);
    }
    std::vector<std::int64_t> present;
    for (const auto& v : {row.closed, row.intersection, row.definition}) {
      if (v) present.push_back(*v);
    }
    row.agree = std::ranges::adjacent_find(present, std::ranges::not_equal_to{}) == present.end();
    if (!row.agree) report.problems.push_back("sources disagree at r = " + std::to_string(r));
    report.rows.push_back(row);
  }

  // Invariants on the agreed (or first available) value per r.
  auto value_of = [](const HierarchyRow& row) {
    return row.closed ? row.closed : row.intersection ? row.intersection : row.definition;
  };
  std::optional<std::int64_t> prev;
  for (const auto& row : report.rows) {
    const auto v = value_of(row);
    if (!v) continue;
    if (prev && *v <= *prev) {
      report.strictly_increasing = false;
      report.problems.push_back("hierarchy not strictly increasing at r = " + std::to_string(row.r));
    }
    prev = v;
    if (row.r == report.dim && *v != report.n) {
      report.top_weight_is_length = false;
      report.problems.push_back("d_" + std::to_string(row.r) + " != n");
    }
  }
  report.status = report.problems.empty() ? Status::kVerified : Status::kFailed;
  return report;
}

}  // namespace qfc::hierarchy
