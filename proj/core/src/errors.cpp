#include "sasaki/errors.hpp"

#include <cstdio>

namespace sasaki {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::BadDimension: return "BadDimension";
    case ErrorCode::NotUnitSpeed: return "NotUnitSpeed";
    case ErrorCode::DegenerateFrame: return "DegenerateFrame";
    case ErrorCode::MissingScalar: return "MissingScalar";
    case ErrorCode::CIsOne: return "CIsOne";
    case ErrorCode::TooFewSamples: return "TooFewSamples";
    case ErrorCode::NonUniformSpacing: return "NonUniformSpacing";
    case ErrorCode::ConstraintViolated: return "ConstraintViolated";
    case ErrorCode::InadmissibleAngle: return "InadmissibleAngle";
    case ErrorCode::NormViolated: return "NormViolated";
    case ErrorCode::StepTooLarge: return "StepTooLarge";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::NotRepresentable: return "NotRepresentable";
    case ErrorCode::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

namespace {
std::string constraint_message(const std::string& constraint, double residual) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3e", residual);
  return constraint + " violated (residual " + buf + ")";
}
}  // namespace

ConstraintError::ConstraintError(std::string constraint, double residual)
    : Error(ErrorCode::ConstraintViolated, constraint_message(constraint, residual)),
      constraint_(std::move(constraint)),
      residual_(residual) {}

}  // namespace sasaki
