#pragma once

#include <stdexcept>
#include <string>

namespace sasaki {

enum class ErrorCode {
  DimensionMismatch,
  BadDimension,
  NotUnitSpeed,
  DegenerateFrame,
  MissingScalar,
  CIsOne,
  TooFewSamples,
  NonUniformSpacing,
  ConstraintViolated,
  InadmissibleAngle,
  NormViolated,
  StepTooLarge,
  GridTooCoarse,
  NotRepresentable,
  MalformedInput,
};

const char* to_string(ErrorCode code) noexcept;

/// Single exception type for the library; `code()` tells callers which
/// contract was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Thrown by generators when a parameter constraint fails; carries the
/// constraint name and the offending residual.
class ConstraintError : public Error {
 public:
  ConstraintError(std::string constraint, double residual);

  const std::string& constraint() const noexcept { return constraint_; }
  double residual() const noexcept { return residual_; }

 private:
  std::string constraint_;
  double residual_;
};

}  // namespace sasaki
