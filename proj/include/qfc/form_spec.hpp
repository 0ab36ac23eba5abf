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

// Text syntax for trace forms:
//
//   spec  := "tr" ":" ( "0" | term { ("+" | "-") term } )
//   term  := [ "+" | "-" ] [ coeff [ "*" ] ] "x" [ "^" exp ]
//
// Whitespace is ignored. A coefficient is the base-p integer encoding of a
// field element (small integers are therefore prime-field constants) and
// defaults to 1; the exponent defaults to 1. Examples: "tr: x^12",
// "tr: x^2 + x^4", "tr: x^2 - x^4", "tr: 5*x^2 - 2 x^10".

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qfc/gf.hpp"
#include "qfc/qform.hpp"

namespace qfc::qform {

struct TermSpec {
  bool negative = false;
  std::uint64_t coefficient = 1;
  std::uint64_t exponent = 1;

  friend bool operator==(const TermSpec&, const TermSpec&) = default;
};

struct FormSpec {
  std::vector<TermSpec> terms;

  friend bool operator==(const FormSpec&, const FormSpec&) = default;
};

// Throws Error(kParse) naming the 1-based column of the offending character.
FormSpec parse_form_spec(std::string_view text);
std::string to_string(const FormSpec& spec);

// Coefficient encodings must be below p^m (kParse otherwise).
std::vector<Term> to_terms(const FormSpec& spec, const FieldCtx& ctx);

QuadraticForm form_from_spec(const FieldCtx& ctx, std::string_view text);

}  // namespace qfc::qform
