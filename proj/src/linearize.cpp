#include <armlqr/linearize.hpp>

namespace armlqr {

TorqueCommand equilibrium_torque(const ManipulatorParams& p, const Vec3& theta) {
  return {gravity_vector(p, theta)};
}

StateSpaceModel linearize_about(const ManipulatorParams& p, const Vec3& theta0, DynamicsModel model,
                                JacobianSteps steps) {
  StateSpaceModel ss;
  ss.operating_state = JointState::at_rest(theta0);
  ss.operating_torque = equilibrium_torque(p, theta0);

  const Vec6 x0 = ss.operating_state.stacked();
  ss.A.topRightCorner<3, 3>().setIdentity();
  for (int j = 0; j < 6; ++j) {
    const double h = j < 3 ? steps.angle : steps.velocity;
    Vec6 plus = x0;
    Vec6 minus = x0;
    plus[j] += h;
    minus[j] -= h;
    const Vec3 acc_plus = forward_dynamics(p, JointState::from_stacked(plus), ss.operating_torque, model);
    const Vec3 acc_minus = forward_dynamics(p, JointState::from_stacked(minus), ss.operating_torque, model);
    ss.A.block<3, 1>(3, j) = (acc_plus - acc_minus) / (2.0 * h);
  }

  ss.B.bottomRows<3>() = inverse_inertia(inertia_matrix(p, theta0, model));
  ss.C.leftCols<3>().setIdentity();
  return ss;
}

Vec6 linear_rk4_step(const StateSpaceModel& ss, const Vec6& x, const Vec3& u, double dt) {
  const Vec6 bu = ss.B * u;
  const auto f = [&](const Vec6& s) -> Vec6 { return ss.A * s + bu; };
  const Vec6 k1 = f(x);
  const Vec6 k2 = f(x + 0.5 * dt * k1);
  const Vec6 k3 = f(x + 0.5 * dt * k2);
  const Vec6 k4 = f(x + dt * k3);
  return x + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace armlqr
