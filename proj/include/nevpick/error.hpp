// Copyright 2026 The nevpick Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nevpick {

enum class ErrorCode {
  NotSquare,
  NotHermitian,
  DimensionMismatch,
  ConvergenceFailure,
  NotPositiveDefinite,
  CenterMismatch,
  OrderMismatch,
  DivisionByZeroJet,
  IndexOutOfRange,
  OutsideDisc,
  NodeOutsideDisc,
  DuplicateNode,
  EmptyJet,
  NonFiniteValue,
  NonPositiveScale,
  EmptyInstance,
  InvalidConfig,
  ParseError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::CenterMismatch: return "CenterMismatch";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::DivisionByZeroJet: return "DivisionByZeroJet";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::OutsideDisc: return "OutsideDisc";
    case ErrorCode::NodeOutsideDisc: return "NodeOutsideDisc";
    case ErrorCode::DuplicateNode: return "DuplicateNode";
    case ErrorCode::EmptyJet: return "EmptyJet";
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
    case ErrorCode::NonPositiveScale: return "NonPositiveScale";
    case ErrorCode::EmptyInstance: return "EmptyInstance";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// True for failures caused by bad input data rather than numerics.
  bool is_input_error() const noexcept {
    switch (code_) {
      case ErrorCode::ConvergenceFailure:
      case ErrorCode::NotPositiveDefinite:
      case ErrorCode::NotHermitian:
        return false;
      default:
        return true;
    }
  }

 private:
  ErrorCode code_;
};

}  // namespace nevpick
