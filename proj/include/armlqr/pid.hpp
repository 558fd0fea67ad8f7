#pragma once

#include <armlqr/model.hpp>
#include <armlqr/types.hpp>

namespace armlqr {

/// Independent per-joint PID gains. The integral is accumulated in torque
/// units (ki * integral of error) and clamped to +-integral_limit [N m].
struct PidGains {
  Vec3 kp = Vec3::Zero();
  Vec3 ki = Vec3::Zero();
  Vec3 kd = Vec3::Zero();
  Vec3 integral_limit = Vec3::Constant(1.0);
};

/// Baseline gains for the 2.5 kg arm, hand-tuned on the rigid-body plant at
/// the default step so the loop converges with visible overshoot.
PidGains default_pid_gains();

/// Throws Error{InvalidArgument} unless kp, kd >= 0 and integral_limit > 0.
void validate_pid_gains(const PidGains& g);

struct PidOutput {
  TorqueCommand torque;
  Vec3 integral = Vec3::Zero();
};

/// One controller update. Error e = theta_ref - theta; the integral gains
/// ki * e * dt and is clamped; the derivative acts on measured velocity so a
/// setpoint step produces no derivative kick:
///   tau = feedforward + kp e + integral - kd omega
PidOutput pid_control(const PidGains& gains, const JointState& state, const JointState& reference,
                      const Vec3& integral, double dt, const TorqueCommand& feedforward);

}  // namespace armlqr
