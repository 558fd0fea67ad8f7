#pragma once

#include <armlqr/model.hpp>
#include <armlqr/types.hpp>

#include <array>

namespace armlqr {

using Point3 = Vec3;

/// One row of the Denavit-Hartenberg table: common-normal length `a`,
/// twist `alpha`, offset `d` along the previous z axis, joint angle `theta`.
struct DhRow {
  double a = 0.0;
  double alpha = 0.0;
  double d = 0.0;
  double theta = 0.0;
};

/// Homogeneous rigid transform stored as rotation + translation.
struct Transform {
  Mat3 rotation = Mat3::Identity();
  Vec3 translation = Vec3::Zero();

  Transform operator*(const Transform& rhs) const {
    return {rotation * rhs.rotation, rotation * rhs.translation + translation};
  }

  Eigen::Matrix4d homogeneous() const;
};

/// Per-link frame origins P0 (base) ... P3 (end effector).
using LinkPoints = std::array<Point3, 4>;

inline constexpr double kCosineClampTolerance = 1e-9;

Transform dh_transform(const DhRow& row);

/// The arm's DH table for the given joint angles.
std::array<DhRow, 3> dh_table(const ManipulatorParams& p, const Vec3& theta);

/// Base-to-end-effector transform, product of the three link transforms.
Transform chain_transform(const ManipulatorParams& p, const Vec3& theta);

LinkPoints forward_kinematics(const ManipulatorParams& p, const Vec3& theta);

inline Point3 end_effector(const ManipulatorParams& p, const Vec3& theta) { return forward_kinematics(p, theta)[3]; }

/// Closed-form position IK, elbow-up branch.
///
/// Throws Error{Unreachable} when the target lies outside the annulus
/// |a2 - a3| <= r3 <= a2 + a3 around the shoulder, and Error{SingularTarget}
/// when the target is on the base axis (yaw undefined) or at the shoulder.
Vec3 inverse_kinematics(const ManipulatorParams& p, const Point3& target);

bool is_orthonormal(const Mat3& r, double tol = 1e-9);

}  // namespace armlqr
