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

#include "qfc/code.hpp"

#include <stdexcept>

#include "json.hpp"
#include "qfc/error.hpp"

namespace qfc::code {

namespace {

// Largest field the construction will scan element by element.
constexpr std::uint64_t kMaxConstructibleField = std::uint64_t{1} << 22;

}  // namespace

TraceCode build_code(const qform::QuadraticForm& f, PrimeElem a) {
  const FieldCtx& ctx = f.ctx();
  if (ctx.size() > kMaxConstructibleField) {
    throw Error(ErrorKind::kTooLarge, "field with " + std::to_string(ctx.size()) +
                                          " elements is too large to enumerate");
  }
  a = ctx.prime(a.value);
  const int m = ctx.m();
  const Digit p = ctx.p();

  DefiningSet d{a, {}, {}};
  std::vector<std::uint8_t> membership(ctx.size(), 0);
  for (std::uint64_t code = 1; code < ctx.size(); ++code) {
    FFElem x = ctx.decode(code);
    if (f.evaluate(x) != a) continue;
    membership[code] = 1;
    d.codes.push_back(code);
    d.elements.push_back(std::move(x));
  }
  if (d.elements.empty()) {
    throw Error(ErrorKind::kEmptyDefiningSet,
                "f(x) = " + std::to_string(a.value) + " has no nonzero solution");
  }

  // |D_a| must match the point count on the full space, which also counts
  // x = 0 when a = 0.
  const std::uint64_t predicted =
      qform::count_points(f, Subspace::full(m, p), a) - (a.value == 0 ? 1 : 0);
  if (predicted != d.elements.size()) {
    throw std::logic_error("build_code: defining set size disagrees with the point count");
  }

  const int n = static_cast<int>(d.elements.size());
  MatrixFp gen(m, n, p);
  for (int i = 0; i < m; ++i) {
    const FFElem vi = ctx.basis(i);
    for (int j = 0; j < n; ++j) gen(i, j) = ctx.trace(ctx.mul(vi, d.elements[j])).value;
  }

  MatrixFp echelon = gen;
  const auto piv = rref_in_place(echelon);
  const int dim = static_cast<int>(piv.size());
  MatrixFp basis = gen;
  if (dim < m) {
    std::vector<int> keep(dim);
    for (int i = 0; i < dim; ++i) keep[i] = i;
    basis = echelon.select_rows(keep);
  }
  return TraceCode(ctx, std::move(d), std::move(gen), dim, std::move(basis), std::move(membership));
}

std::vector<Digit> codeword(const TraceCode& code, const FFElem& x) {
  return row_times(x.coords, code.generator());
}

int hamming_weight(std::span<const Digit> word) {
  int w = 0;
  for (const Digit d : word) w += d != 0;
  return w;
}

std::vector<WeightCount> weight_distribution(const TraceCode& code, kernels::ExecPolicy policy) {
  if (code.ctx().size() > kMaxEnumerableField) {
    throw Error(ErrorKind::kTooLarge, "weight distribution needs p^m <= " +
                                          std::to_string(kMaxEnumerableField));
  }
  const auto hist = kernels::weight_histogram(code.generator(), policy);
  std::vector<WeightCount> out;
  for (std::size_t w = 0; w < hist.size(); ++w) {
    if (hist[w] != 0) out.push_back({static_cast<int>(w), hist[w]});
  }
  return out;
}

int subcode_support(const TraceCode& code, const Subspace& x) {
  if (code.dim() < code.ctx().m()) {
    throw Error(ErrorKind::kDegenerateCode, "message subspaces and subcodes differ when dim < m");
  }
  if (x.ambient_dim() != code.ctx().m()) {
    throw std::invalid_argument("subcode_support: subspace is not in the message space");
  }
  if (x.dim() == 0) return 0;
  return kernels::support_size(x.basis() * code.generator());
}

std::string serialize(const TraceCode& code) {
  const auto& ctx = code.ctx();
  nlohmann::ordered_json j;
  j["p"] = ctx.p();
  j["m"] = ctx.m();
  j["modulus"] = ctx.modulus();
  j["a"] = code.defining_set().a.value;
  j["n"] = code.length();
  j["dim"] = code.dim();
  j["defining_set"] = code.defining_set().codes;
  auto rows = nlohmann::ordered_json::array();
  for (int i = 0; i < code.generator().rows(); ++i) {
    const auto r = code.generator().row(i);
    rows.push_back(std::vector<Digit>(r.begin(), r.end()));
  }
  j["generator"] = std::move(rows);
  return j.dump();
}

}  // namespace qfc::code
