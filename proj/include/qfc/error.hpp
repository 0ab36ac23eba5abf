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

#include <stdexcept>
#include <string>
#include <string_view>

namespace qfc {

enum class ErrorKind {
  // gf
  kNotPrime,
  kEvenCharacteristic,
  kReducible,
  kBadDegree,
  kDivisionByZero,
  // subspaces
  kDimOutOfRange,
  // qform
  kNotAQuadraticForm,
  kZeroDimSubspace,
  kDegenerateAmbient,
  // code
  kEmptyDefiningSet,
  kTooLarge,
  kDegenerateCode,
  // hierarchy
  kAZeroOutOfScope,
  kRankZero,
  kDimensionDeficit,
  kBudgetExceeded,
  // form-spec grammar / cli input
  kParse,
};

std::string_view to_string(ErrorKind kind);

// Every library failure is reported through this one exception type; callers
// that need to branch (the CLI exit-code mapping, tests) switch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qfc
