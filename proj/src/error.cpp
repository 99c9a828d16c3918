#include "trilab/error.hpp"

#include <algorithm>

namespace trilab {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kZeroArgument: return "ZeroArgument";
    case ErrorCode::kNotDivisor: return "NotDivisor";
    case ErrorCode::kCtxMismatch: return "CtxMismatch";
    case ErrorCode::kSizeTooLarge: return "SizeTooLarge";
    case ErrorCode::kBadTensorShape: return "BadTensorShape";
    case ErrorCode::kTooManyVariables: return "TooManyVariables";
    case ErrorCode::kOrderError: return "OrderError";
    case ErrorCode::kDegenerateBound: return "DegenerateBound";
    case ErrorCode::kNotSubgroup: return "NotSubgroup";
    case ErrorCode::kConfigError: return "ConfigError";
    case ErrorCode::kGuardTripped: return "GuardTripped";
    case ErrorCode::kMissingReport: return "MissingReport";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::string to_string(Count value) {
  if (value == 0) return "0";
  std::string out;
  while (value > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace trilab
