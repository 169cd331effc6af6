// Copyright 2026 The clifford-climb Authors
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

namespace climb {

enum class ErrorCode {
  Dimension,
  NotUnitary,
  NotHermitian,
  NotSymplectic,
  NotInvolution,
  NotHyperbolic,
  DecompositionNotFound,
  NotIndependent,
  NotIsotropic,
  NotClifford,
  NotCommuting,
  NotSymmetric,
  NotInvertible,
  OrderNotTwoOrFour,
  BudgetExceeded,
  ParseSyntax,
  ParseArity,
  ParseIndex,
  ParseDuplicate,
  Io,
};

constexpr std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Dimension: return "Dimension";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotSymplectic: return "NotSymplectic";
    case ErrorCode::NotInvolution: return "NotInvolution";
    case ErrorCode::NotHyperbolic: return "NotHyperbolic";
    case ErrorCode::DecompositionNotFound: return "DecompositionNotFound";
    case ErrorCode::NotIndependent: return "NotIndependent";
    case ErrorCode::NotIsotropic: return "NotIsotropic";
    case ErrorCode::NotClifford: return "NotClifford";
    case ErrorCode::NotCommuting: return "NotCommuting";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::OrderNotTwoOrFour: return "OrderNotTwoOrFour";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ParseSyntax: return "ParseSyntax";
    case ErrorCode::ParseArity: return "ParseArity";
    case ErrorCode::ParseIndex: return "ParseIndex";
    case ErrorCode::ParseDuplicate: return "ParseDuplicate";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  bool is_parse_error() const noexcept {
    return code_ == ErrorCode::ParseSyntax || code_ == ErrorCode::ParseArity ||
           code_ == ErrorCode::ParseIndex || code_ == ErrorCode::ParseDuplicate;
  }

 private:
  ErrorCode code_;
};

}  // namespace climb
