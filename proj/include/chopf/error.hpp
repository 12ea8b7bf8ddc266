#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chopf {

enum class ErrorCode {
  DivisionByZero,
  FieldMismatch,
  LengthMismatch,
  GroupMismatch,
  AmbientMismatch,
  DimensionMismatch,
  NotGraded,
  NotParallel,
  NotCocommutative,
  NotClosed,
  NotModuleCoalgebra,
  ValueUnavailable,
  GradingIncompatible,
  NotOddDegree,
  DoesNotCommute,
  VerificationFailed,
  InvalidArgument,
  ParseError,
  UnknownName,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace chopf
