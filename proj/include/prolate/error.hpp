#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace prolate {

enum class ErrorCode {
  VariableMismatch,
  Pole,
  NotSymmetric,
  OddOrder,
  NonPolynomial,
  NotInSubalgebra,
  EvennessViolation,
  SeedsDependent,
  NonRationalCoefficients,
  FactorizationFails,
  DualFactorizationFails,
  UnverifiedData,
  BoundViolated,
  PoleOnContour,
  NotSymmetricGenerator,
  NoNonconstantSolution,
  SearchBudgetExceeded,
  InvalidContour,
  Overflow,
  NonConvergence,
  TruncationTail,
  Parse,
  Config,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace prolate
