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

#include <gtest/gtest.h>

#include <sstream>

#include "json.hpp"
#include "qfc/error.hpp"

namespace qfc::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_args(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = main_entry(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json last_record(const std::string& text) {
  std::istringstream in(text);
  std::string line, last;
  while (std::getline(in, line))
    if (!line.empty()) last = line;
  return nlohmann::json::parse(last);
}

std::vector<std::int64_t> column(const nlohmann::json& rec, const char* key) {
  std::vector<std::int64_t> out;
  for (const auto& row : rec["hierarchy"]) out.push_back(row.at(key).get<std::int64_t>());
  return out;
}

TEST(Cli, VerifyWorkedForm) {
  const auto o = run_args({"--p", "3", "--m", "4", "--form", "tr: x^12", "--a", "1", "--mode",
                           "verify", "--format", "json-lines"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const auto rec = last_record(o.out);
  EXPECT_EQ(rec["status"], "VERIFIED");
  EXPECT_EQ(rec["n"], 36);
  EXPECT_EQ(rec["dim"], 4);
  EXPECT_EQ(rec["invariants"]["rank"], 2);
  EXPECT_EQ(rec["invariants"]["l"], 2);
  EXPECT_EQ(rec["invariants"]["s"], 1);
  EXPECT_EQ(rec["invariants"]["sign"], 1);
  const std::vector<std::int64_t> want{18, 30, 34, 36};
  EXPECT_EQ(column(rec, "closed"), want);
  EXPECT_EQ(column(rec, "oracleA"), want);
  EXPECT_EQ(column(rec, "oracleB"), want);
}

TEST(Cli, HierarchyModeClosedFormOnly) {
  const auto o = run_args({"--p", "3", "--m", "4", "--form", "tr: x^2 - x^4", "--a", "1",
                           "--mode", "hierarchy", "--format", "json-lines"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const auto rec = last_record(o.out);
  EXPECT_EQ(column(rec, "closed"), (std::vector<std::int64_t>{6, 12, 16, 18}));
  EXPECT_FALSE(rec["hierarchy"][0].contains("oracleA"));
}

TEST(Cli, TableShowsSourceTags) {
  const auto o = run_args({"--p", "3", "--m", "4", "--form", "tr: x^2 + x^4", "--a", "2"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  for (const char* tag : {"closed", "oracleA", "oracleB", "VERIFIED"}) {
    EXPECT_NE(o.out.find(tag), std::string::npos) << tag;
  }
}

TEST(Cli, CsvMirrorsHierarchy) {
  const auto o = run_args({"--p", "3", "--m", "4", "--form", "tr: x^2 + x^4", "--a", "2",
                           "--format", "csv", "--r", "1..2"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  EXPECT_EQ(o.out, "r,closed,oracleA,oracleB,agree\n1,6,6,6,true\n2,12,12,12,true\n");
}

TEST(Cli, InvariantsAndWdist) {
  auto o = run_args({"--p", "3", "--m", "4", "--form", "tr: x^12", "--a", "1", "--mode",
                     "invariants", "--format", "csv"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  EXPECT_EQ(o.out, "rank,l,s,sign,n,dim\n2,2,1,1,36,4\n");
  o = run_args({"--p", "3", "--m", "4", "--form", "tr: x^12", "--a", "1", "--mode", "wdist",
                "--format", "csv"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  EXPECT_EQ(o.out, "weight,count\n0,1\n18,4\n24,72\n36,4\n");
}

TEST(Cli, JsonLinesAreByteStable) {
  const std::vector<std::string> base{"--p", "3", "--m", "5", "--form", "tr: x^2 + 2*x^4",
                                      "--a", "1", "--format", "json-lines"};
  const auto first = run_args(base);
  ASSERT_EQ(first.code, kExitOk) << first.err;
  EXPECT_EQ(run_args(base).out, first.out);
  auto threaded = base;
  threaded.insert(threaded.end(), {"--threads", "4"});
  EXPECT_EQ(run_args(threaded).out, first.out);
  // whitespace in the form spec does not leak into the record
  auto spaced = base;
  spaced[5] = "tr:x^2+2*x^4";
  EXPECT_EQ(run_args(spaced).out, first.out);
}

TEST(Cli, ExitCodes) {
  // not a quadratic form
  EXPECT_EQ(run_args({"--p", "3", "--m", "4", "--form", "tr: x^3", "--a", "1"}).code,
            kExitInputError);
  // parse error, reported with a column
  const auto bad = run_args({"--p", "3", "--m", "4", "--form", "tr: x^^2", "--a", "1"});
  EXPECT_EQ(bad.code, kExitInputError);
  EXPECT_NE(bad.err.find("column"), std::string::npos);
  EXPECT_EQ(run_args({"--p", "4", "--m", "2", "--form", "tr: x^2", "--a", "1"}).code,
            kExitInputError);
  EXPECT_EQ(run_args({"--p", "3", "--m", "2", "--modulus", "2,0,1", "--form", "tr: x^2", "--a",
                      "1"})
                .code,
            kExitInputError);
  EXPECT_EQ(run_args({"--p", "3", "--m", "4", "--form", "tr: x^2", "--a", "1", "--r", "7"}).code,
            kExitInputError);
  // missing --a outside invariants mode
  EXPECT_EQ(run_args({"--p", "3", "--m", "4", "--form", "tr: x^2"}).code, kExitInputError);
  // a = 0: closed form out of scope, oracles fine
  EXPECT_EQ(run_args({"--p", "3", "--m", "4", "--form", "tr: x^12", "--a", "0", "--mode",
                      "hierarchy"})
                .code,
            kExitOutOfScope);
  const auto zero = run_args({"--p", "3", "--m", "4", "--form", "tr: x^12", "--a", "0",
                              "--format", "json-lines"});
  EXPECT_EQ(zero.code, kExitOk);
  EXPECT_EQ(column(last_record(zero.out), "oracleA"), (std::vector<std::int64_t>{6, 8}));
  // corrupted sign
  EXPECT_EQ(run_args({"--p", "3", "--m", "4", "--form", "tr: x^12", "--a", "1", "--force-sign",
                      "-1"})
                .code,
            kExitDisagreement);
  // budget
  EXPECT_EQ(run_args({"--p", "3", "--m", "4", "--form", "tr: x^12", "--a", "1", "--budget", "5"})
                .code,
            kExitBudget);
  EXPECT_EQ(run_args({"--p", "3", "--m", "7", "--form", "tr: x^2", "--a", "1"}).code, kExitBudget);
}

TEST(Cli, ParseHelpers) {
  EXPECT_EQ(parse_r_range("3"), (std::vector<int>{3}));
  EXPECT_EQ(parse_r_range("2..4"), (std::vector<int>{2, 3, 4}));
  EXPECT_EQ(parse_r_range("1,3"), (std::vector<int>{1, 3}));
  EXPECT_THROW(parse_r_range("4..2"), Error);
  EXPECT_THROW(parse_r_range("x"), Error);
  EXPECT_EQ(parse_modulus("1,0,1,1,1"), (std::vector<gf::Digit>{1, 0, 1, 1, 1}));
  EXPECT_THROW(parse_modulus("1,,2"), Error);
}

}  // namespace
}  // namespace qfc::cli
