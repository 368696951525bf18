#include "hdawz/errors.hpp"

namespace hdawz {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPositiveParameter: return "NonPositiveParameter";
    case ErrorCode::DegradednessViolation: return "DegradednessViolation";
    case ErrorCode::SideInfoVarianceViolation: return "SideInfoVarianceViolation";
    case ErrorCode::RateOutOfRange: return "RateOutOfRange";
    case ErrorCode::UnsupportedBandwidthRatio: return "UnsupportedBandwidthRatio";
    case ErrorCode::MismatchOutOfRange: return "MismatchOutOfRange";
    case ErrorCode::LeakageBudgetExceedsPower: return "LeakageBudgetExceedsPower";
    case ErrorCode::SingularCovariance: return "SingularCovariance";
    case ErrorCode::InsufficientSpan: return "InsufficientSpan";
    case ErrorCode::ConfigParse: return "ConfigParse";
    case ErrorCode::Usage: return "Usage";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code) {}

void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace hdawz
