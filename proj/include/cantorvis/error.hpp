#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cantorvis {

enum class ErrorCode {
  ParseError,
  OutOfRange,
  NonPositiveDenominator,
  ZeroRatio,
  DepthBudgetExceeded,
  NotBasicEndpoints,
  LengthMismatch,
  NegativeSlope,
  RegimeUnsupported,
  InsufficientScales,
  NotIntervalAttractor,
  DegenerateIfs,
  OutOfAttractor,
  ClosureNotFinite,
  EmptySystem,
};

/// Stable machine-readable name, used by the CLI error reports.
std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cantorvis
