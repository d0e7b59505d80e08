#include "cantorvis/error.hpp"

namespace cantorvis {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NonPositiveDenominator: return "NonPositiveDenominator";
    case ErrorCode::ZeroRatio: return "ZeroRatio";
    case ErrorCode::DepthBudgetExceeded: return "DepthBudgetExceeded";
    case ErrorCode::NotBasicEndpoints: return "NotBasicEndpoints";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NegativeSlope: return "NegativeSlope";
    case ErrorCode::RegimeUnsupported: return "RegimeUnsupported";
    case ErrorCode::InsufficientScales: return "InsufficientScales";
    case ErrorCode::NotIntervalAttractor: return "NotIntervalAttractor";
    case ErrorCode::DegenerateIfs: return "DegenerateIfs";
    case ErrorCode::OutOfAttractor: return "OutOfAttractor";
    case ErrorCode::ClosureNotFinite: return "ClosureNotFinite";
    case ErrorCode::EmptySystem: return "EmptySystem";
  }
  return "Unknown";
}

}  // namespace cantorvis
