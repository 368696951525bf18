#pragma once

#include <stdexcept>
#include <string>

namespace hdawz {

enum class ErrorCode {
  NonPositiveParameter,
  DegradednessViolation,
  SideInfoVarianceViolation,
  RateOutOfRange,
  UnsupportedBandwidthRatio,
  MismatchOutOfRange,
  LeakageBudgetExceedsPower,
  SingularCovariance,
  InsufficientSpan,
  ConfigParse,
  Usage,
};

const char* error_code_name(ErrorCode code);

// Library-wide exception. what() carries a single-line diagnostic prefixed
// with the code name, suitable for printing to stderr as-is.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& message);

}  // namespace hdawz
