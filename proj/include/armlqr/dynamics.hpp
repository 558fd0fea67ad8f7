#pragma once

#include <armlqr/model.hpp>
#include <armlqr/types.hpp>

#include <array>

namespace armlqr {

/// Which closed-form equations of motion to evaluate.
///
/// `ClosedForm` is the hand-expanded inertia/velocity/gravity set kept term
/// for term. Its M23 entry carries an extra a2^2 m3 term and a 1/3 coupling
/// factor, which leave M(theta) indefinite for realistic link proportions, so
/// it is not a usable plant.
/// `RigidBody` is the slender-rod Lagrangian of the same arm: it agrees with
/// `ClosedForm` in M11, M22, M33 and G, uses M23 = m3 (a3^2/3 + a2 a3 cos(theta3)/2),
/// and derives V from M through Christoffel symbols. The two V vectors agree.
enum class DynamicsModel { RigidBody, ClosedForm };

/// M(theta), V(theta, omega) and G(theta) evaluated at one state.
struct DynamicsTerms {
  Mat3 M = Mat3::Zero();
  Vec3 V = Vec3::Zero();
  Vec3 G = Vec3::Zero();
};

inline constexpr double kMaxInertiaCondition = 1e12;

Mat3 inertia_matrix(const ManipulatorParams& p, const Vec3& theta, DynamicsModel model = DynamicsModel::RigidBody);

/// Partial derivatives dM/dtheta_k, k = 0..2. Only the rigid-body model has
/// a matching V; this is what its Christoffel symbols are built from.
std::array<Mat3, 3> inertia_gradient(const ManipulatorParams& p, const Vec3& theta);

Vec3 velocity_vector(const ManipulatorParams& p, const Vec3& theta, const Vec3& omega,
                     DynamicsModel model = DynamicsModel::RigidBody);

/// Identical for both models.
Vec3 gravity_vector(const ManipulatorParams& p, const Vec3& theta);

DynamicsTerms dynamics_terms(const ManipulatorParams& p, const JointState& state,
                             DynamicsModel model = DynamicsModel::RigidBody);

/// tau = M accel + V + G
TorqueCommand inverse_dynamics(const ManipulatorParams& p, const JointState& state, const Vec3& accel,
                               DynamicsModel model = DynamicsModel::RigidBody);

/// accel = M^-1 (tau - V - G). Throws Error{SingularInertia}.
Vec3 forward_dynamics(const ManipulatorParams& p, const JointState& state, const TorqueCommand& tau,
                      DynamicsModel model = DynamicsModel::RigidBody);

/// Ratio of largest to smallest eigenvalue magnitude, using the
/// block-diagonal layout (M11 scalar, lower 2x2 block).
double inertia_condition(const Mat3& m);

/// Solves M x = rhs for a block-diagonal inertia. Throws Error{SingularInertia}
/// when the condition number reaches kMaxInertiaCondition.
Vec3 solve_inertia(const Mat3& m, const Vec3& rhs);

/// Inverse of a block-diagonal inertia, same failure rule as solve_inertia.
Mat3 inverse_inertia(const Mat3& m);

/// 0.5 omega^T M omega
double kinetic_energy(const ManipulatorParams& p, const JointState& state,
                      DynamicsModel model = DynamicsModel::RigidBody);

/// Gravitational potential of links 2 and 3 relative to the base plane.
/// Its gradient is gravity_vector.
double potential_energy(const ManipulatorParams& p, const Vec3& theta);

}  // namespace armlqr
