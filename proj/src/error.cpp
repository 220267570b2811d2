#include "ptq/error.hpp"

namespace ptq {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DegenerateCubic: return "DegenerateCubic";
    case ErrorCode::OmegaSingular: return "OmegaSingular";
    case ErrorCode::NearDefective: return "NearDefective";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NoSignChange: return "NoSignChange";
    case ErrorCode::NotConverged: return "NotConverged";
    case ErrorCode::EmptyCurve: return "EmptyCurve";
    case ErrorCode::NotAtEp: return "NotAtEp";
    case ErrorCode::InvalidDensity: return "InvalidDensity";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::StepTooLarge: return "StepTooLarge";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::EpTooClose: return "EpTooClose";
    case ErrorCode::NoDerivativeConvergence: return "NoDerivativeConvergence";
    case ErrorCode::ZeroSlope: return "ZeroSlope";
  }
  return "Unknown";
}

}  // namespace ptq
