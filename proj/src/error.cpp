#include "chopf/error.hpp"

namespace chopf {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotGraded: return "NotGraded";
    case ErrorCode::NotParallel: return "NotParallel";
    case ErrorCode::NotCocommutative: return "NotCocommutative";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NotModuleCoalgebra: return "NotModuleCoalgebra";
    case ErrorCode::ValueUnavailable: return "ValueUnavailable";
    case ErrorCode::GradingIncompatible: return "GradingIncompatible";
    case ErrorCode::NotOddDegree: return "NotOddDegree";
    case ErrorCode::DoesNotCommute: return "DoesNotCommute";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownName: return "UnknownName";
  }
  return "Unknown";
}

}  // namespace chopf
