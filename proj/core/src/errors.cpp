#include "ipdyn/errors.hpp"

namespace ipdyn {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::NotIntegralPolynomial: return "NotIntegralPolynomial";
    case ErrorCode::NotInP0: return "NotInP0";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DuplicateMember: return "DuplicateMember";
    case ErrorCode::EmptySystem: return "EmptySystem";
    case ErrorCode::ShiftCollision: return "ShiftCollision";
    case ErrorCode::NonTermination: return "NonTermination";
    case ErrorCode::TruncationTooLarge: return "TruncationTooLarge";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::BadLength: return "BadLength";
    case ErrorCode::BadRules: return "BadRules";
    case ErrorCode::WindowTooLarge: return "WindowTooLarge";
    case ErrorCode::HypothesisViolation: return "HypothesisViolation";
    case ErrorCode::ZeroPower: return "ZeroPower";
    case ErrorCode::BadModulus: return "BadModulus";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), detail_(message) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

int exit_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::HypothesisViolation:
      return 2;
    case ErrorCode::WindowTooLarge:
    case ErrorCode::BudgetExceeded:
    case ErrorCode::TruncationTooLarge:
    case ErrorCode::NonTermination:
      return 3;
    default:
      return 1;
  }
}

}  // namespace ipdyn
