#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ptq {

enum class ErrorCode {
  InvalidArgument,
  DegenerateCubic,
  OmegaSingular,
  NearDefective,
  NoConvergence,
  NoSignChange,
  NotConverged,
  EmptyCurve,
  NotAtEp,
  InvalidDensity,
  NotNormalized,
  StepTooLarge,
  NonFinite,
  EpTooClose,
  NoDerivativeConvergence,
  ZeroSlope,
};

std::string_view to_string(ErrorCode code);

// Validation errors are the caller's fault; everything else is a numerical
// failure of a well-formed request.
constexpr bool is_validation_error(ErrorCode code) {
  return code == ErrorCode::InvalidArgument || code == ErrorCode::NotNormalized ||
         code == ErrorCode::InvalidDensity || code == ErrorCode::StepTooLarge;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), detail_(what) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace ptq
