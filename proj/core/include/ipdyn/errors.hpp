#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ipdyn {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  ValidationError,
  IoError,
  NotIntegralPolynomial,
  NotInP0,
  DimensionMismatch,
  DuplicateMember,
  EmptySystem,
  ShiftCollision,
  NonTermination,
  TruncationTooLarge,
  IndexOutOfRange,
  BudgetExceeded,
  BadLength,
  BadRules,
  WindowTooLarge,
  HypothesisViolation,
  ZeroPower,
  BadModulus,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; the code identifies the failure
/// class and drives the CLI exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  /// Message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

/// Exit status contract of the CLI: 0 ok, 1 usage/parse/io, 2 hypothesis
/// violation, 3 budget or window limits.
int exit_status(ErrorCode code);

}  // namespace ipdyn
