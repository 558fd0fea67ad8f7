#include <armlqr/pid.hpp>

#include <armlqr/error.hpp>

namespace armlqr {

PidGains default_pid_gains() {
  PidGains g;
  g.kp = Vec3(4.0, 2.0, 0.4);
  g.ki = Vec3(1.5, 1.5, 0.8);
  g.kd = Vec3(0.45, 0.3, 0.05);
  g.integral_limit = Vec3(1.0, 1.0, 1.0);
  return g;
}

void validate_pid_gains(const PidGains& g) {
  if (!g.kp.allFinite() || !g.ki.allFinite() || !g.kd.allFinite() || !g.integral_limit.allFinite()) {
    throw Error(ErrorCode::InvalidArgument, "PID gains must be finite");
  }
  if ((g.kp.array() < 0.0).any() || (g.kd.array() < 0.0).any()) {
    throw Error(ErrorCode::InvalidArgument, "PID kp and kd must be non-negative");
  }
  if ((g.integral_limit.array() <= 0.0).any()) {
    throw Error(ErrorCode::InvalidArgument, "PID integral_limit must be positive");
  }
}

PidOutput pid_control(const PidGains& gains, const JointState& state, const JointState& reference,
                      const Vec3& integral, double dt, const TorqueCommand& feedforward) {
  if (!(dt > 0.0)) throw Error(ErrorCode::InvalidArgument, "pid_control: dt must be positive");
  const Vec3 error = reference.theta - state.theta;
  const Vec3 updated =
      (integral + gains.ki.cwiseProduct(error) * dt).cwiseMax(-gains.integral_limit).cwiseMin(gains.integral_limit);
  PidOutput out;
  out.integral = updated;
  out.torque.tau = feedforward.tau + gains.kp.cwiseProduct(error) + updated - gains.kd.cwiseProduct(state.omega);
  return out;
}

}  // namespace armlqr
