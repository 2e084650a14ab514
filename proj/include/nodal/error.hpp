#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nodal {

enum class ErrorKind {
  DivisionByZero,
  FieldMismatch,
  RingMismatch,
  SyntaxError,
  UnknownVariable,
  SingularMatrix,
  CapacityExceeded,
  NotZeroDimensional,
  NotRadical,
  SolverRetryExhausted,
  EmptySingularLocus,
  ChartRetryExhausted,
  LikelyNonNodalSingularities,
  HypothesisViolation,
  CombinationSamplingFailed,
  MethodDisagreement,
  NonIntegralResult,
  NegativeHodgeNumber,
  BadCharacteristic,
  DegreeInfeasible,
  SystemInfeasible,
  InvalidArgument,
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure carrying the byte offset of the offending token.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(ErrorKind::SyntaxError, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

inline std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::CapacityExceeded: return "CapacityExceeded";
    case ErrorKind::NotZeroDimensional: return "NotZeroDimensional";
    case ErrorKind::NotRadical: return "NotRadical";
    case ErrorKind::SolverRetryExhausted: return "SolverRetryExhausted";
    case ErrorKind::EmptySingularLocus: return "EmptySingularLocus";
    case ErrorKind::ChartRetryExhausted: return "ChartRetryExhausted";
    case ErrorKind::LikelyNonNodalSingularities: return "LikelyNonNodalSingularities";
    case ErrorKind::HypothesisViolation: return "HypothesisViolation";
    case ErrorKind::CombinationSamplingFailed: return "CombinationSamplingFailed";
    case ErrorKind::MethodDisagreement: return "MethodDisagreement";
    case ErrorKind::NonIntegralResult: return "NonIntegralResult";
    case ErrorKind::NegativeHodgeNumber: return "NegativeHodgeNumber";
    case ErrorKind::BadCharacteristic: return "BadCharacteristic";
    case ErrorKind::DegreeInfeasible: return "DegreeInfeasible";
    case ErrorKind::SystemInfeasible: return "SystemInfeasible";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace nodal
