#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace trilab {

enum class ErrorCode {
  kNotPrime,
  kTooLarge,
  kZeroArgument,
  kNotDivisor,
  kCtxMismatch,
  kSizeTooLarge,
  kBadTensorShape,
  kTooManyVariables,
  kOrderError,
  kDegenerateBound,
  kNotSubgroup,
  kConfigError,
  kGuardTripped,
  kMissingReport,
  kInvalidArgument,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Exact counts. Second moments of spectra reach p * (UVW)^2.
using Count = unsigned __int128;

std::string to_string(Count value);

}  // namespace trilab
