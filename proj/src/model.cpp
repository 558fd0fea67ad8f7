#include <armlqr/model.hpp>

#include <armlqr/error.hpp>

#include <cmath>
#include <string>

namespace armlqr {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonPositiveDimension: return "NonPositiveDimension";
    case ErrorCode::MassMismatch: return "MassMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Unreachable: return "Unreachable";
    case ErrorCode::SingularTarget: return "SingularTarget";
    case ErrorCode::SingularInertia: return "SingularInertia";
    case ErrorCode::NoStabilizingSolution: return "NoStabilizingSolution";
    case ErrorCode::ControllerSynthesisFailed: return "ControllerSynthesisFailed";
    case ErrorCode::NumericalDivergence: return "NumericalDivergence";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

int exit_code(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonPositiveDimension:
    case ErrorCode::MassMismatch:
    case ErrorCode::InvalidArgument:
      return 2;
    case ErrorCode::Unreachable:
    case ErrorCode::SingularTarget:
    case ErrorCode::SingularInertia:
      return 3;
    case ErrorCode::NoStabilizingSolution:
    case ErrorCode::ControllerSynthesisFailed:
    case ErrorCode::NumericalDivergence:
      return 4;
    case ErrorCode::Io:
      return 5;
  }
  return 1;
}

ManipulatorParams proportional_params(double a1, double a2, double a3, double m_total, double g) {
  const double total_length = a1 + a2 + a3;
  ManipulatorParams p;
  p.a1 = a1;
  p.a2 = a2;
  p.a3 = a3;
  p.m1 = m_total * (a1 / total_length);
  p.m2 = m_total * (a2 / total_length);
  p.m3 = m_total * (a3 / total_length);
  p.g = g;
  p.m_total = m_total;
  return p;
}

ManipulatorParams default_params() { return proportional_params(0.25, 0.15, 0.15, 2.5); }

void validate_params(const ManipulatorParams& p) {
  const auto require_positive = [](double v, const char* name) {
    if (!(std::isfinite(v) && v > 0.0)) {
      throw Error(ErrorCode::NonPositiveDimension, std::string(name) + " must be positive, got " + std::to_string(v));
    }
  };
  require_positive(p.a1, "a1");
  require_positive(p.a2, "a2");
  require_positive(p.a3, "a3");
  require_positive(p.m1, "m1");
  require_positive(p.m2, "m2");
  require_positive(p.m3, "m3");
  require_positive(p.g, "g");
  require_positive(p.m_total, "m_total");
  if (std::abs(p.m1 + p.m2 + p.m3 - p.m_total) > kMassTolerance) {
    throw Error(ErrorCode::MassMismatch, "link masses sum to " + std::to_string(p.m1 + p.m2 + p.m3) +
                                             " kg but m_total is " + std::to_string(p.m_total) + " kg");
  }
}

void validate_state(const JointState& s) {
  if (!s.finite()) throw Error(ErrorCode::InvalidArgument, "joint state has non-finite entries");
}

}  // namespace armlqr
