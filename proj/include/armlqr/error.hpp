#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace armlqr {

enum class ErrorCode {
  NonPositiveDimension,
  MassMismatch,
  InvalidArgument,
  Unreachable,
  SingularTarget,
  SingularInertia,
  NoStabilizingSolution,
  ControllerSynthesisFailed,
  NumericalDivergence,
  Io,
};

/// Stable identifier printed as the prefix of CLI error lines.
std::string_view error_name(ErrorCode code) noexcept;

/// Process exit code the CLI reports for a given failure category.
int exit_code(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace armlqr
