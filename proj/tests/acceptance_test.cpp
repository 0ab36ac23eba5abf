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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qfc/cli.hpp"
#include "qfc/code.hpp"
#include "qfc/error.hpp"
#include "qfc/form_spec.hpp"
#include "qfc/hierarchy.hpp"
#include "qfc/qform.hpp"
#include "testing/catalog.hpp"
#include "testing/oracles.hpp"

namespace {

using namespace qfc;
namespace t = qfc::testing;
using I = std::int64_t;

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

qform::QuadraticForm make(const t::CatalogForm& c) {
  return qform::form_from_spec(gf::FieldCtx::make(c.p, c.m), c.spec);
}

std::vector<Subspace> subspaces_from(int m, Digit p, int min_dim) {
  std::vector<Subspace> out;
  for (int d = min_dim; d <= m; ++d)
    for (auto& h : enumerate_subspaces(m, d, p)) out.push_back(std::move(h));
  return out;
}

// Three-way comparison for one worked form.
Check worked(const std::string& spec, int rank, int s, int l, int sign, int n,
             const std::vector<I>& want) {
  Check c;
  const auto f = qform::form_from_spec(gf::FieldCtx::make(3, 4), spec);
  const auto prof = hierarchy::FormProfile::of(f, gf::PrimeElem{1});
  c.expect(prof.rank == rank && prof.s == s && prof.l == l && prof.sign == sign, "invariants");
  const auto code = code::build_code(f, gf::PrimeElem{1});
  c.expect(code.length() == n, "n = " + std::to_string(code.length()));
  c.expect(code.dim() == 4, "dim = " + std::to_string(code.dim()));
  c.expect(hierarchy::closed_form(prof) == want, "closed form");
  for (int r = 1; r <= 4; ++r) {
    c.expect(hierarchy::oracle_intersection(code, r) == want[r - 1], "oracleA r=" + std::to_string(r));
    c.expect(hierarchy::oracle_definition(code, r) == want[r - 1], "oracleB r=" + std::to_string(r));
  }
  const auto rep = hierarchy::verify(f, gf::PrimeElem{1});
  c.expect(rep.status == hierarchy::Status::kVerified, "verify status");
  return c;
}

Check criterion1() {
  return worked("tr: x^12", 2, 1, 2, 1, 36, {18, 30, 34, 36});
}

Check criterion2() {
  return worked("tr: x^2 + x^4", 3, 1, 1, -1, 36, {18, 30, 34, 36});
}

Check criterion3() {
  return worked("tr: x^2 - x^4", 3, 1, 1, 1, 18, {6, 12, 16, 18});
}

Check criterion4() {
  Check c;
  for (const auto& w : t::worked_forms()) {
    const auto f = make(w);
    const auto brute = t::brute_form(f.ctx(), w.spec);
    // 212 counts the zero subspace too; the formula needs d >= 1
    const auto hs = subspaces_from(4, 3, 0);
    c.expect(hs.size() == 212, "subspace count " + std::to_string(hs.size()));
    for (const auto& h : hs) {
      if (h.dim() == 0) continue;
      std::map<int, std::uint64_t> hist;
      for (auto code : member_codes(h)) ++hist[brute(t::decode(code, 4, 3))];
      for (Digit a = 0; a < 3; ++a) {
        c.expect(qform::count_points(f, h, gf::PrimeElem{a}) == hist[static_cast<int>(a)],
                 w.spec + " dim " + std::to_string(h.dim()));
      }
    }
  }
  return c;
}

Check criterion5() {
  Check c;
  for (const auto& w : t::worked_forms()) {
    const auto f = make(w);
    const auto q = qform::quotient(f);
    for (const auto& h : subspaces_from(4, 3, 0)) {
      c.expect(q.image(qform::dual_space(f, h)) == qform::dual_space(q.form, q.image(h)), w.spec);
    }
  }
  return c;
}

Check criterion6() {
  Check c;
  std::vector<std::pair<std::string, qform::GramForm>> spaces;
  for (const auto& w : t::worked_forms()) spaces.emplace_back(w.spec, qform::quotient(make(w)).form);
  spaces.emplace_back("tr: x^2 over 5^3", make({5, 3, "tr: x^2", 3, 1}).gram_form());
  for (const auto& [name, g] : spaces) {
    c.expect(g.nondegenerate(), name + " degenerate");
    std::size_t count = 0;
    for (const auto& h : subspaces_from(g.dim(), g.p(), 0)) {
      // evaluate both sides directly from the restricted forms
      const auto dual = qform::dual_space(g, h);
      const int e = intersect(h, dual).dim();
      const int lhs = (h.dim() == 0 ? 1 : qform::restrict_to(g, h).sign_factor) *
                      (dual.dim() == 0 ? 1 : qform::restrict_to(g, dual).sign_factor);
      const int rhs = ((e * (static_cast<int>(g.p()) - 1) / 2) % 2 == 0 ? 1 : -1) * g.sign();
      c.expect(lhs == rhs, name);
      c.expect(qform::disc_product_check(g, h), name);
      ++count;
    }
    c.expect(count > 0, name);
  }
  return c;
}

Check criterion7() {
  Check c;
  std::set<std::pair<int, int>> fields;
  bool even = false, odd = false, eps_pos = false, eps_neg = false, matched = false, opposed = false;
  for (const auto& w : t::catalog()) {
    fields.insert({w.p, w.m});
    const auto f = make(w);
    c.expect(f.rank() == w.rank && f.sign() == w.sign, w.spec + " invariants");
    (f.rank() % 2 == 0 ? even : odd) = true;
    for (Digit a = 1; a < static_cast<Digit>(w.p); ++a) {
      const auto prof = hierarchy::FormProfile::of(f, gf::PrimeElem{a});
      (prof.derived_sign == 1 ? eps_pos : eps_neg) = true;
      const auto branch = hierarchy::dispatch(prof);
      if (branch == hierarchy::Branch::kOddMatched) matched = true;
      if (branch == hierarchy::Branch::kOddOpposed) opposed = true;
      const auto rep = hierarchy::verify(f, gf::PrimeElem{a});
      c.expect(rep.status == hierarchy::Status::kVerified,
               w.spec + " over " + std::to_string(w.p) + "^" + std::to_string(w.m) +
                   " a=" + std::to_string(a));
      c.expect(static_cast<int>(rep.rows.size()) == w.m, w.spec + " rows");
      for (const auto& row : rep.rows) {
        c.expect(row.closed && row.intersection && row.definition && *row.closed == *row.intersection &&
                     *row.closed == *row.definition,
                 w.spec + " r=" + std::to_string(row.r));
      }
    }
  }
  c.expect(t::catalog().size() >= 8, "catalog size");
  c.expect(fields == std::set<std::pair<int, int>>{{3, 3}, {3, 4}, {3, 5}, {5, 3}}, "fields");
  c.expect(even && odd && eps_pos && eps_neg && matched && opposed, "coverage");
  return c;
}

bool has_self_dual(const qform::GramForm& g, int dim) {
  for (const auto& h : enumerate_subspaces(g.dim(), dim, g.p()))
    if (qform::dual_space(g, h) == h) return true;
  return false;
}

Check criterion8() {
  Check c;
  // monotonicity in every report
  for (const auto& w : t::catalog()) {
    const auto f = make(w);
    for (Digit a = 0; a < static_cast<Digit>(w.p); ++a) {
      try {
        const auto rep = hierarchy::verify(f, gf::PrimeElem{a});
        c.expect(rep.strictly_increasing, w.spec + " monotone");
      } catch (const Error& e) {
        c.expect(e.kind() == ErrorKind::kEmptyDefiningSet, w.spec + " " + e.what());
      }
    }
  }
  // sum over a of the point counts
  for (const auto& w : t::worked_forms()) {
    const auto f = make(w);
    for (const auto& h : subspaces_from(4, 3, 1)) {
      std::uint64_t total = 0;
      for (Digit a = 0; a < 3; ++a) total += qform::count_points(f, h, gf::PrimeElem{a});
      c.expect(total == h.size(), "point count total");
    }
  }
  // enumeration counts
  for (auto [p, m] : {std::pair{3u, 3}, std::pair{3u, 4}, std::pair{3u, 5}, std::pair{5u, 3}}) {
    for (int k = 0; k <= m; ++k) {
      SubspaceEnumerator e(m, k, p);
      std::uint64_t n = 0;
      while (e.next()) ++n;
      c.expect(n == gaussian_binomial(m, k, p), "gaussian count");
      if (t::ipow(t::ipow(p, m), k) <= 20'000 && k >= 1) {
        c.expect(n == t::count_subspaces_by_spans(m, k, p), "span count");
      }
    }
  }
  // even-rank branches agree at r = s
  for (const auto& w : t::catalog()) {
    if (w.rank % 2 != 0) continue;
    const int s = w.rank / 2, l = w.m - w.rank;
    for (Digit a = 1; a < static_cast<Digit>(w.p); ++a) {
      const auto prof = hierarchy::FormProfile::make(w.p, w.m, w.rank, w.sign, gf::PrimeElem{a});
      const I e = prof.derived_sign;
      const I top = static_cast<I>(t::ipow(w.p, w.m - 1));
      const I tail = static_cast<I>(t::ipow(w.p, w.m - s - 1));
      const I mid = static_cast<I>(t::ipow(w.p, s + l - 1));
      c.expect(top - tail - (e + 1) * mid == top - 2 * tail - e * mid, w.spec + " overlap");
      c.expect(hierarchy::closed_form(prof)[s - 1] == top - 2 * tail - e * mid, w.spec + " at s");
    }
  }
  // self-dual lines in binary non-degenerate spaces
  for (Digit p : {3u, 5u, 7u}) {
    const int want = (p - 1) / 2 % 2 == 0 ? 1 : -1;
    for (Digit k = 1; k < p; ++k) {
      const qform::GramForm g(MatrixFp::from_rows({{1, 0}, {0, k}}, 2, p));
      c.expect(has_self_dual(g, 1) == (g.sign() == want), "binary witness search");
    }
  }
  const auto q1 = qform::quotient(make(t::worked_forms()[0])).form;
  c.expect(q1.dim() == 2 && has_self_dual(q1, 1) == (q1.sign() == -1), "quotient witness search");
  return c;
}

struct CliRun {
  int code;
  std::string out;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::main_entry(args, out, err);
  return {code, out.str()};
}

Check criterion9() {
  Check c;
  try {
    qform::form_from_spec(gf::FieldCtx::make(3, 4), "tr: x^3");
    c.expect(false, "x^3 accepted");
  } catch (const Error& e) {
    c.expect(e.kind() == ErrorKind::kNotAQuadraticForm, "x^3 error kind");
  }
  c.expect(cli({"--p", "3", "--m", "4", "--form", "tr: x^3", "--a", "1"}).code == cli::kExitInputError,
           "x^3 exit code");

  c.expect(cli({"--p", "3", "--m", "4", "--form", "tr: x^12", "--a", "0", "--mode", "hierarchy"}).code ==
               cli::kExitOutOfScope,
           "a = 0 closed form exit code");
  const auto zero = cli({"--p", "3", "--m", "4", "--form", "tr: x^12", "--a", "0", "--mode", "verify",
                         "--format", "json-lines"});
  c.expect(zero.code == cli::kExitOk, "a = 0 oracle exit code");
  const auto rec = nlohmann::json::parse(zero.out);
  c.expect(rec["hierarchy"].size() == 2 && rec["hierarchy"][0]["oracleA"] == 6 &&
               rec["hierarchy"][1]["oracleB"] == 8 && !rec["hierarchy"][0].contains("closed"),
           "a = 0 oracle hierarchy");

  hierarchy::VerifyOptions opt;
  opt.sign_override = -1;
  const auto bad = hierarchy::verify(make(t::worked_forms()[0]), gf::PrimeElem{1}, opt);
  c.expect(bad.status == hierarchy::Status::kFailed, "corrupted sign status");
  c.expect(cli({"--p", "3", "--m", "4", "--form", "tr: x^12", "--a", "1", "--force-sign", "-1"}).code ==
               cli::kExitDisagreement,
           "corrupted sign exit code");
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"worked form tr: x^12, a = 1", criterion1},
      {"worked form tr: x^2 + x^4, a = 1", criterion2},
      {"worked form tr: x^2 - x^4, a = 1", criterion3},
      {"point counts on all 212 subspaces", criterion4},
      {"quotient maps duals to duals", criterion5},
      {"discriminant product identity", criterion6},
      {"cross-parity catalog, three-way", criterion7},
      {"property suite", criterion8},
      {"negative paths", criterion9},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Check c;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %zu %s (%.2fs)%s%s\n", c.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                secs, c.ok ? "" : ": ", c.detail.c_str());
    failed += !c.ok;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
