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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qfc/gf.hpp"

namespace qfc::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDisagreement = 2;
inline constexpr int kExitOutOfScope = 3;
inline constexpr int kExitInputError = 4;
inline constexpr int kExitBudget = 5;
inline constexpr int kExitDomainError = 6;

enum class Mode { kInvariants, kHierarchy, kVerify, kWdist, kCode };
enum class Format { kTable, kJsonLines, kCsv };

struct RunConfig {
  std::uint64_t p = 0;
  int m = 0;
  std::optional<std::vector<gf::Digit>> modulus;
  std::string form;
  std::optional<std::int64_t> a;
  Mode mode = Mode::kVerify;
  // Empty means the default range.
  std::vector<int> r_set;
  Format format = Format::kTable;
  std::uint64_t budget = 1'000'000;
  int threads = 1;
  // Diagnostic: overrides the computed sign of the form before the closed
  // form is evaluated.
  std::optional<int> force_sign;
};

// "3", "2..4" and "1,3,4" are accepted. Throws Error(kParse).
std::vector<int> parse_r_range(const std::string& text);
// Comma-separated coefficients, constant term first.
std::vector<gf::Digit> parse_modulus(const std::string& text);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv-style arguments (without the program name) and runs.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qfc::cli
