#include <armlqr/kinematics.hpp>

#include <armlqr/error.hpp>

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <string>

namespace armlqr {

namespace {

// Law-of-cosines argument, clamped when it strays past +-1 by rounding only.
double clamped_acos(double c) {
  if (std::abs(c) > 1.0 + kCosineClampTolerance) {
    throw Error(ErrorCode::Unreachable, "target outside the arm's reach (cosine argument " + std::to_string(c) + ")");
  }
  return std::acos(std::clamp(c, -1.0, 1.0));
}

}  // namespace

Eigen::Matrix4d Transform::homogeneous() const {
  Eigen::Matrix4d h = Eigen::Matrix4d::Identity();
  h.topLeftCorner<3, 3>() = rotation;
  h.topRightCorner<3, 1>() = translation;
  return h;
}

Transform dh_transform(const DhRow& row) {
  const double ct = std::cos(row.theta);
  const double st = std::sin(row.theta);
  const double ca = std::cos(row.alpha);
  const double sa = std::sin(row.alpha);
  Transform t;
  t.rotation << ct, -st * ca, st * sa,
                st, ct * ca, -ct * sa,
                0.0, sa, ca;
  t.translation << row.a * ct, row.a * st, row.d;
  return t;
}

std::array<DhRow, 3> dh_table(const ManipulatorParams& p, const Vec3& theta) {
  return {{
      {0.0, kPi / 2.0, p.a1, theta[0]},
      {p.a2, 0.0, 0.0, theta[1]},
      {p.a3, 0.0, 0.0, theta[2]},
  }};
}

Transform chain_transform(const ManipulatorParams& p, const Vec3& theta) {
  const auto rows = dh_table(p, theta);
  return dh_transform(rows[0]) * dh_transform(rows[1]) * dh_transform(rows[2]);
}

LinkPoints forward_kinematics(const ManipulatorParams& p, const Vec3& theta) {
  const double c1 = std::cos(theta[0]);
  const double s1 = std::sin(theta[0]);
  const double c2 = std::cos(theta[1]);
  const double s2 = std::sin(theta[1]);
  const double c23 = std::cos(theta[1] + theta[2]);
  const double s23 = std::sin(theta[1] + theta[2]);
  const double reach2 = p.a2 * c2;
  const double reach3 = p.a3 * c23 + p.a2 * c2;
  return {{
      Point3::Zero(),
      Point3(0.0, 0.0, p.a1),
      Point3(reach2 * c1, reach2 * s1, p.a2 * s2 + p.a1),
      Point3(reach3 * c1, reach3 * s1, p.a3 * s23 + p.a2 * s2 + p.a1),
  }};
}

Vec3 inverse_kinematics(const ManipulatorParams& p, const Point3& target) {
  if (!target.allFinite()) throw Error(ErrorCode::InvalidArgument, "IK target has non-finite coordinates");
  const double x = target.x();
  const double y = target.y();
  const double r1 = std::hypot(x, y);
  const double r2 = target.z() - p.a1;
  const double r3 = std::hypot(r1, r2);

  const double max_reach = p.a2 + p.a3;
  const double min_reach = std::abs(p.a2 - p.a3);
  if (r3 > max_reach * (1.0 + kCosineClampTolerance) || r3 < min_reach * (1.0 - kCosineClampTolerance)) {
    throw Error(ErrorCode::Unreachable, "target at distance " + std::to_string(r3) +
                                            " m from the shoulder; reachable band is [" + std::to_string(min_reach) +
                                            ", " + std::to_string(max_reach) + "] m");
  }
  if (r1 == 0.0) throw Error(ErrorCode::SingularTarget, "target on the base axis, yaw angle undefined");
  if (r3 < 1e-12) throw Error(ErrorCode::SingularTarget, "target coincides with the shoulder joint");

  const double a2 = p.a2;
  const double a3 = p.a3;
  const double yaw = std::atan2(y, x);
  const double elevation = std::atan2(r2, r1);
  const double shoulder_offset = clamped_acos((a3 * a3 - a2 * a2 - r3 * r3) / (-2.0 * a2 * r3));
  const double elbow_interior = clamped_acos((r3 * r3 - a2 * a2 - a3 * a3) / (-2.0 * a2 * a3));
  return {yaw, elevation - shoulder_offset, kPi - elbow_interior};
}

bool is_orthonormal(const Mat3& r, double tol) {
  const Mat3 gram = r.transpose() * r;
  return (gram - Mat3::Identity()).cwiseAbs().maxCoeff() <= tol && std::abs(r.determinant() - 1.0) <= tol;
}

}  // namespace armlqr
