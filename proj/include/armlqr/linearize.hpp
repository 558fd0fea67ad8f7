#pragma once

#include <armlqr/dynamics.hpp>
#include <armlqr/model.hpp>
#include <armlqr/types.hpp>

namespace armlqr {

/// Linear model x_dot = A x + B u, y = C x + D u in error coordinates about
/// an operating point: x = state - operating_state, u = tau - operating_torque.
struct StateSpaceModel {
  Mat6 A = Mat6::Zero();
  Mat63 B = Mat63::Zero();
  Mat36 C = Mat36::Zero();
  Mat3 D = Mat3::Zero();
  JointState operating_state;
  TorqueCommand operating_torque;
};

/// Central-difference steps for the Jacobian, in rad and rad/s.
struct JacobianSteps {
  double angle = 1e-5;
  double velocity = 1e-5;
};

/// Torque that holds the arm at rest at `theta` (gravity only).
TorqueCommand equilibrium_torque(const ManipulatorParams& p, const Vec3& theta);

/// Linearizes the nonlinear dynamics about (theta0, omega = 0) with the
/// gravity-holding torque as input origin. The acceleration rows of A come
/// from central differences of forward_dynamics; B's lower block is the exact
/// M(theta0)^-1 since acceleration is affine in torque.
StateSpaceModel linearize_about(const ManipulatorParams& p, const Vec3& theta0,
                                DynamicsModel model = DynamicsModel::RigidBody, JacobianSteps steps = {});

/// One explicit RK4 step of the linear model (error coordinates).
Vec6 linear_rk4_step(const StateSpaceModel& ss, const Vec6& x, const Vec3& u, double dt);

}  // namespace armlqr
