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

#include "qfc/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qfc/code.hpp"
#include "qfc/error.hpp"
#include "qfc/form_spec.hpp"
#include "qfc/hierarchy.hpp"

namespace qfc::cli {
namespace {

using json = nlohmann::ordered_json;

std::string_view mode_name(Mode m) {
  switch (m) {
    case Mode::kInvariants: return "invariants";
    case Mode::kHierarchy: return "hierarchy";
    case Mode::kVerify: return "verify";
    case Mode::kWdist: return "wdist";
    case Mode::kCode: return "code";
  }
  return "?";
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNotPrime:
    case ErrorKind::kEvenCharacteristic:
    case ErrorKind::kReducible:
    case ErrorKind::kBadDegree:
    case ErrorKind::kNotAQuadraticForm:
    case ErrorKind::kDimOutOfRange:
    case ErrorKind::kParse:
      return kExitInputError;
    case ErrorKind::kBudgetExceeded:
    case ErrorKind::kTooLarge:
      return kExitBudget;
    case ErrorKind::kAZeroOutOfScope:
    case ErrorKind::kRankZero:
      return kExitOutOfScope;
    default:
      return kExitDomainError;
  }
}

std::int64_t parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw Error(ErrorKind::kParse, "bad " + what + ": '" + s + "'");
  return v;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

struct Context {
  const RunConfig& cfg;
  gf::FieldCtx field;
  qform::FormSpec spec;
  qform::QuadraticForm form;
};

json config_record(const Context& c) {
  json j;
  j["p"] = c.field.p();
  j["m"] = c.field.m();
  j["modulus"] = c.field.modulus();
  j["form"] = qform::to_string(c.spec);
  if (c.cfg.a) j["a"] = c.field.prime(*c.cfg.a).value;
  j["mode"] = mode_name(c.cfg.mode);
  if (!c.cfg.r_set.empty()) j["r"] = c.cfg.r_set;
  return j;
}

json invariants_record(const qform::QuadraticForm& f) {
  json j;
  j["rank"] = f.rank();
  j["l"] = f.radical_dim();
  j["s"] = f.rank() / 2;
  j["sign"] = f.sign();
  return j;
}

std::string signed_str(int v) { return v > 0 ? "+" + std::to_string(v) : std::to_string(v); }

void print_header(const Context& c, std::ostream& out) {
  const auto& f = c.form;
  out << "field   F_" << c.field.p() << "^" << c.field.m() << "  modulus";
  for (const auto d : c.field.modulus()) out << ' ' << d;
  out << "\nform    " << qform::to_string(c.spec) << '\n';
  out << "rank " << f.rank() << "  l " << f.radical_dim() << "  s " << f.rank() / 2 << "  sign "
      << signed_str(f.sign()) << '\n';
}

std::string opt_str(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : "-"; }

void emit_report(const Context& c, const hierarchy::HierarchyReport& rep, std::string_view status,
                 std::ostream& out) {
  switch (c.cfg.format) {
    case Format::kJsonLines: {
      json j;
      j["config"] = config_record(c);
      j["invariants"] = invariants_record(c.form);
      j["n"] = rep.n;
      j["dim"] = rep.dim;
      auto rows = json::array();
      for (const auto& row : rep.rows) {
        json r;
        r["r"] = row.r;
        if (row.closed) r[hierarchy::tag(hierarchy::Source::kClosed)] = *row.closed;
        if (row.intersection) r[hierarchy::tag(hierarchy::Source::kIntersection)] = *row.intersection;
        if (row.definition) r[hierarchy::tag(hierarchy::Source::kDefinition)] = *row.definition;
        r["agree"] = row.agree;
        rows.push_back(std::move(r));
      }
      j["hierarchy"] = std::move(rows);
      if (!rep.closed_in_scope) j["closed_note"] = rep.closed_note;
      j["status"] = status;
      out << j.dump() << '\n';
      break;
    }
    case Format::kCsv: {
      out << "r,closed,oracleA,oracleB,agree\n";
      for (const auto& row : rep.rows) {
        auto cell = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : ""; };
        out << row.r << ',' << cell(row.closed) << ',' << cell(row.intersection) << ','
            << cell(row.definition) << ',' << (row.agree ? "true" : "false") << '\n';
      }
      break;
    }
    case Format::kTable: {
      print_header(c, out);
      out << "a " << rep.profile.a.value << "  n " << rep.n << "  dim " << rep.dim << '\n';
      if (!rep.closed_in_scope && c.cfg.mode == Mode::kVerify) {
        out << "closed  out of scope (" << rep.closed_note << ")\n";
      }
      out << std::setw(4) << "r" << std::setw(10) << "closed" << std::setw(10) << "oracleA"
          << std::setw(10) << "oracleB" << std::setw(8) << "agree" << '\n';
      for (const auto& row : rep.rows) {
        out << std::setw(4) << row.r << std::setw(10) << opt_str(row.closed) << std::setw(10)
            << opt_str(row.intersection) << std::setw(10) << opt_str(row.definition) << std::setw(8)
            << (row.agree ? "yes" : "NO") << '\n';
      }
      for (const auto& problem : rep.problems) out << "problem " << problem << '\n';
      out << "status  " << status << '\n';
      break;
    }
  }
}

int run_invariants(const Context& c, std::ostream& out) {
  std::optional<int> n, dim;
  if (c.cfg.a) {
    try {
      const auto code = code::build_code(c.form, c.field.prime(*c.cfg.a));
      n = code.length();
      dim = code.dim();
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kEmptyDefiningSet) throw;
      n = 0;
      dim = 0;
    }
  }
  const auto& f = c.form;
  switch (c.cfg.format) {
    case Format::kJsonLines: {
      json j;
      j["config"] = config_record(c);
      j["invariants"] = invariants_record(f);
      if (n) j["n"] = *n;
      if (dim) j["dim"] = *dim;
      j["status"] = "OK";
      out << j.dump() << '\n';
      break;
    }
    case Format::kCsv:
      out << "rank,l,s,sign,n,dim\n"
          << f.rank() << ',' << f.radical_dim() << ',' << f.rank() / 2 << ',' << f.sign() << ','
          << (n ? std::to_string(*n) : "") << ',' << (dim ? std::to_string(*dim) : "") << '\n';
      break;
    case Format::kTable:
      print_header(c, out);
      if (n) out << "a " << c.field.prime(*c.cfg.a).value << "  n " << *n << "  dim " << *dim << '\n';
      break;
  }
  return kExitOk;
}

int run_hierarchy(const Context& c, std::ostream& out, std::ostream& err) {
  const gf::PrimeElem a = c.field.prime(*c.cfg.a);
  hierarchy::VerifyOptions opt;
  opt.r_set = c.cfg.r_set;
  opt.exec.threads = c.cfg.threads;
  opt.budget.max_subspaces = c.cfg.budget;
  opt.sign_override = c.cfg.force_sign;
  if (c.cfg.mode == Mode::kHierarchy) opt.run_oracles = false;

  const auto rep = hierarchy::verify(c.form, a, opt);
  if (c.cfg.mode == Mode::kHierarchy && !rep.closed_in_scope) {
    err << "error: " << rep.closed_note << '\n';
    emit_report(c, rep, "OUT_OF_SCOPE", out);
    return kExitOutOfScope;
  }
  emit_report(c, rep, hierarchy::to_string(rep.status), out);
  return rep.status == hierarchy::Status::kVerified ? kExitOk : kExitDisagreement;
}

int run_wdist(const Context& c, std::ostream& out) {
  const auto code = code::build_code(c.form, c.field.prime(*c.cfg.a));
  const auto dist = code::weight_distribution(code, kernels::ExecPolicy{c.cfg.threads});
  switch (c.cfg.format) {
    case Format::kJsonLines: {
      json j;
      j["config"] = config_record(c);
      j["invariants"] = invariants_record(c.form);
      j["n"] = code.length();
      j["dim"] = code.dim();
      auto arr = json::array();
      for (const auto& w : dist) arr.push_back(json{{"weight", w.weight}, {"count", w.count}});
      j["weight_distribution"] = std::move(arr);
      j["status"] = "OK";
      out << j.dump() << '\n';
      break;
    }
    case Format::kCsv:
      out << "weight,count\n";
      for (const auto& w : dist) out << w.weight << ',' << w.count << '\n';
      break;
    case Format::kTable:
      print_header(c, out);
      out << "a " << code.defining_set().a.value << "  n " << code.length() << "  dim " << code.dim() << '\n';
      out << std::setw(8) << "weight" << std::setw(10) << "count" << '\n';
      for (const auto& w : dist) out << std::setw(8) << w.weight << std::setw(10) << w.count << '\n';
      break;
  }
  return kExitOk;
}

int run_code(const Context& c, std::ostream& out) {
  const auto code = code::build_code(c.form, c.field.prime(*c.cfg.a));
  out << code::serialize(code) << '\n';
  return kExitOk;
}

}  // namespace

std::vector<int> parse_r_range(const std::string& text) {
  const std::string t = trim(text);
  std::vector<int> out;
  if (const auto dots = t.find(".."); dots != std::string::npos) {
    const auto lo = parse_int(trim(t.substr(0, dots)), "r range");
    const auto hi = parse_int(trim(t.substr(dots + 2)), "r range");
    if (lo < 1 || hi < lo) throw Error(ErrorKind::kParse, "empty or invalid r range '" + text + "'");
    for (auto r = lo; r <= hi; ++r) out.push_back(static_cast<int>(r));
    return out;
  }
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto r = parse_int(trim(item), "r");
    if (r < 1) throw Error(ErrorKind::kParse, "r must be positive");
    out.push_back(static_cast<int>(r));
  }
  if (out.empty()) throw Error(ErrorKind::kParse, "empty r list");
  return out;
}

std::vector<gf::Digit> parse_modulus(const std::string& text) {
  std::vector<gf::Digit> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto v = parse_int(trim(item), "modulus coefficient");
    if (v < 0) throw Error(ErrorKind::kParse, "modulus coefficients must be non-negative");
    out.push_back(static_cast<gf::Digit>(v));
  }
  if (out.empty()) throw Error(ErrorKind::kParse, "empty modulus");
  return out;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.mode != Mode::kInvariants && !cfg.a) {
      throw Error(ErrorKind::kParse, "--a is required for mode " + std::string(mode_name(cfg.mode)));
    }
    if (cfg.force_sign && *cfg.force_sign != 1 && *cfg.force_sign != -1) {
      throw Error(ErrorKind::kParse, "--force-sign must be 1 or -1");
    }
    auto field = gf::FieldCtx::make(cfg.p, cfg.m, cfg.modulus);
    auto spec = qform::parse_form_spec(cfg.form);
    auto form = qform::QuadraticForm::from_terms(field, qform::to_terms(spec, field));
    const Context c{cfg, std::move(field), std::move(spec), std::move(form)};
    switch (cfg.mode) {
      case Mode::kInvariants: return run_invariants(c, out);
      case Mode::kHierarchy:
      case Mode::kVerify: return run_hierarchy(c, out, err);
      case Mode::kWdist: return run_wdist(c, out);
      case Mode::kCode: return run_code(c, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kExitOk;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weight hierarchies of trace codes from quadratic forms over F_{p^m}", "qfcodes"};
  RunConfig cfg;
  std::string modulus, r_text, mode = "verify", format = "table";
  std::optional<std::int64_t> a;
  std::optional<int> force_sign;

  app.add_option("--p", cfg.p, "odd prime p")->required();
  app.add_option("--m", cfg.m, "extension degree m")->required();
  app.add_option("--modulus", modulus, "monic modulus, coefficients constant term first, comma separated");
  app.add_option("--form", cfg.form, "trace form, e.g. \"tr: x^2 - x^4\"")->required();
  app.add_option("--a", a, "right-hand side a of f(x) = a");
  app.add_option("--mode", mode, "invariants | hierarchy | verify | wdist | code")
      ->check(CLI::IsMember({"invariants", "hierarchy", "verify", "wdist", "code"}));
  app.add_option("--r", r_text, "r, r1..r2 or r1,r2,...; default 1..m");
  app.add_option("--format", format, "table | json-lines | csv")
      ->check(CLI::IsMember({"table", "json-lines", "csv"}));
  app.add_option("--budget", cfg.budget, "max subspaces enumerated per oracle call");
  app.add_option("--threads", cfg.threads, "worker threads for the oracle searches (0 = all)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--force-sign", force_sign, "diagnostic: override the sign fed to the closed form");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (!modulus.empty()) cfg.modulus = parse_modulus(modulus);
    if (!r_text.empty()) cfg.r_set = parse_r_range(r_text);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  cfg.a = a;
  cfg.force_sign = force_sign;
  static const std::map<std::string, Mode> kModes{{"invariants", Mode::kInvariants},
                                                  {"hierarchy", Mode::kHierarchy},
                                                  {"verify", Mode::kVerify},
                                                  {"wdist", Mode::kWdist},
                                                  {"code", Mode::kCode}};
  static const std::map<std::string, Format> kFormats{
      {"table", Format::kTable}, {"json-lines", Format::kJsonLines}, {"csv", Format::kCsv}};
  cfg.mode = kModes.at(mode);
  cfg.format = kFormats.at(format);
  return run(cfg, out, err);
}

}  // namespace qfc::cli
