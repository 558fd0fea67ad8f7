#pragma once

#include <armlqr/model.hpp>
#include <armlqr/types.hpp>

#include <array>
#include <span>

namespace armlqr {

/// Band half-width used instead of band * |step| when a joint is not
/// commanded to move.
inline constexpr double kZeroStepTolerance = 1e-9;

inline constexpr double kDefaultSettlingBand = 0.02;

/// Per-joint step-response figures of one trajectory.
struct ResponseMetrics {
  /// Time after which the joint stays inside the band; +inf when the
  /// trajectory ends outside it.
  Vec3 settling_time = Vec3::Zero();
  std::array<bool, 3> settled{true, true, true};
  /// Largest excursion past the reference in the direction of travel,
  /// percent of |step|. Zero for joints with no commanded step.
  Vec3 overshoot_pct = Vec3::Zero();
  std::array<bool, 3> zero_step{false, false, false};
  Vec3 peak_velocity = Vec3::Zero();
  Vec3 steady_state_error = Vec3::Zero();
  double cost_J = 0.0;
};

/// Settling uses the last exit from the +-band*|step| envelope, located by
/// linear interpolation between samples. Steps are measured from the first
/// sample. Does not fill cost_J.
///
/// Throws Error{InvalidArgument} for an empty or mismatched trajectory.
ResponseMetrics compute_metrics(std::span<const double> times, std::span<const JointState> states,
                                const JointState& reference, double band = kDefaultSettlingBand);

}  // namespace armlqr
