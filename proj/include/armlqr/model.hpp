#pragma once

#include <armlqr/types.hpp>

namespace armlqr {

/// Physical parameters of the three-link arm, SI units throughout.
///
/// Link 1 is the vertical base column, links 2 and 3 form the planar
/// shoulder/elbow chain. `m_total` only records the nominal total; the
/// dynamics use the per-link masses.
struct ManipulatorParams {
  double a1 = 0.25;
  double a2 = 0.15;
  double a3 = 0.15;
  double m1 = 0.0;
  double m2 = 0.0;
  double m3 = 0.0;
  double g = 9.81;
  double m_total = 2.5;
};

/// Joint angles [rad] and angular velocities [rad/s].
struct JointState {
  Vec3 theta = Vec3::Zero();
  Vec3 omega = Vec3::Zero();

  Vec6 stacked() const {
    Vec6 x;
    x << theta, omega;
    return x;
  }

  static JointState from_stacked(const Vec6& x) { return {x.head<3>(), x.tail<3>()}; }

  static JointState at_rest(const Vec3& theta) { return {theta, Vec3::Zero()}; }

  bool finite() const { return theta.allFinite() && omega.allFinite(); }
};

/// Joint torques [N m].
struct TorqueCommand {
  Vec3 tau = Vec3::Zero();

  bool finite() const { return tau.allFinite(); }
};

inline constexpr double kMassTolerance = 1e-9;

/// 2.5 kg arm with 25/15/15 cm links. The total is split across links in
/// proportion to link length (uniform linear density).
ManipulatorParams default_params();

/// Builds a parameter set whose link masses are the length-proportional split
/// of `m_total`.
ManipulatorParams proportional_params(double a1, double a2, double a3, double m_total, double g = 9.81);

/// Throws Error{NonPositiveDimension} or Error{MassMismatch}.
void validate_params(const ManipulatorParams& p);

/// Throws Error{InvalidArgument} if any entry is NaN or infinite.
void validate_state(const JointState& s);

}  // namespace armlqr
