// Copyright 2026 The Authors.
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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fsing {

enum class Errc {
  NotPrime,
  DegreeOutOfRange,
  DivisionByZero,
  FieldMismatch,
  ContextMismatch,
  ZeroInput,
  ZeroDivisor,
  IndexOutOfRange,
  NameCollision,
  ExponentOverflow,
  NotSquareFreeSupported,
  ZeroOrConstant,
  ZeroLeading,
  MultiplierInMinimalPrime,
  CertificateSearchExhausted,
  PointNotOnHypersurface,
  PointNotOnVariety,
  BudgetExceeded,
  SyntaxError,
  UnknownVariable,
  BadFieldSpec,
  EmptyBases,
  InvalidMatroid,
  HypothesisViolated,
  InvalidArgument,
};

constexpr std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::DegreeOutOfRange: return "DegreeOutOfRange";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::ContextMismatch: return "ContextMismatch";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::ZeroDivisor: return "ZeroDivisor";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NameCollision: return "NameCollision";
    case Errc::ExponentOverflow: return "ExponentOverflow";
    case Errc::NotSquareFreeSupported: return "NotSquareFreeSupported";
    case Errc::ZeroOrConstant: return "ZeroOrConstant";
    case Errc::ZeroLeading: return "ZeroLeading";
    case Errc::MultiplierInMinimalPrime: return "MultiplierInMinimalPrime";
    case Errc::CertificateSearchExhausted: return "CertificateSearchExhausted";
    case Errc::PointNotOnHypersurface: return "PointNotOnHypersurface";
    case Errc::PointNotOnVariety: return "PointNotOnVariety";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownVariable: return "UnknownVariable";
    case Errc::BadFieldSpec: return "BadFieldSpec";
    case Errc::EmptyBases: return "EmptyBases";
    case Errc::InvalidMatroid: return "InvalidMatroid";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Raised by the text parsers; carries a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(Errc code, std::size_t line, std::size_t column,
             const std::string& message)
      : Error(code, "line " + std::to_string(line) + ", column " +
                        std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace fsing
