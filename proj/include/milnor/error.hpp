#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace milnor {

enum class ErrorCode {
  PairAxiomViolation,
  DuplicatePoint,
  DegeneratePoint,
  DuplicateLine,
  ParamOutOfRange,
  DomainError,
  DivisionByZero,
  InconsistentRecursion,
  MissingMultiplicities,
  MoveNotApplicable,
  NonTerminating,
  NotNormalForm,
  Unrecognized,
  NotBipartite,
  NoValidBipartition,
  AmbiguousBipartition,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. The code names the failing contract;
/// the message carries the detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace milnor
