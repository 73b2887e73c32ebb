#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toric {

enum class ErrorCode {
  NonPrimeCharacteristic,
  FieldTooLarge,
  NoIrreducibleFound,
  DivisionByZero,
  FieldMismatch,
  LogOfZero,
  ZeroMatrix,
  NotIndependent,
  RingMismatch,
  ZeroPolynomial,
  ResourceExceeded,
  ZeroPoint,
  StructureViolation,
  NotHomogeneous,
  HypothesisNotMet,
  BudgetExceeded,
  HypothesisNotVerified,
  InvalidDimension,
  FieldTooSmall,
  DegreeOutOfRange,
  DistanceUnknown,
  ParseError,
  InvalidArgument,
};

constexpr std::string_view to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::NoIrreducibleFound: return "NoIrreducibleFound";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::LogOfZero: return "LogOfZero";
    case ErrorCode::ZeroMatrix: return "ZeroMatrix";
    case ErrorCode::NotIndependent: return "NotIndependent";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ResourceExceeded: return "ResourceExceeded";
    case ErrorCode::ZeroPoint: return "ZeroPoint";
    case ErrorCode::StructureViolation: return "StructureViolation";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::HypothesisNotVerified: return "HypothesisNotVerified";
    case ErrorCode::InvalidDimension: return "InvalidDimension";
    case ErrorCode::FieldTooSmall: return "FieldTooSmall";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::DistanceUnknown: return "DistanceUnknown";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace toric
