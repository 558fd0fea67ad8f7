#include <armlqr/dynamics.hpp>

#include <armlqr/error.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace armlqr {

namespace {

struct Trig {
  double c2, s2, c3, s3, c23, s23;
  double sin_2t2, sin_2t23, sin_2t2_t3;

  explicit Trig(const Vec3& theta)
      : c2(std::cos(theta[1])),
        s2(std::sin(theta[1])),
        c3(std::cos(theta[2])),
        s3(std::sin(theta[2])),
        c23(std::cos(theta[1] + theta[2])),
        s23(std::sin(theta[1] + theta[2])),
        sin_2t2(std::sin(2.0 * theta[1])),
        sin_2t23(std::sin(2.0 * (theta[1] + theta[2]))),
        sin_2t2_t3(std::sin(2.0 * theta[1] + theta[2])) {}
};

double yaw_inertia(const ManipulatorParams& p, const Trig& t) {
  const double a2 = p.a2, a3 = p.a3;
  return 0.5 * p.m1 * p.a1 * p.a1 + 0.5 * p.m1 * a2 * a2 +
         p.m3 * (a2 * a2 * t.c2 * t.c2 + a3 * a3 * t.c23 * t.c23 / 3.0 + a2 * a3 * t.c23 * t.c2) +
         p.m2 * a2 * a2 * t.c2 * t.c2 / 3.0;
}

double shoulder_inertia(const ManipulatorParams& p, const Trig& t) {
  const double a2 = p.a2, a3 = p.a3, m3 = p.m3;
  return a2 * a2 * p.m2 / 3.0 + a2 * a2 * m3 + a3 * a3 * m3 / 3.0 + a2 * a3 * m3 * t.c3;
}

Vec3 closed_form_velocity(const ManipulatorParams& p, const Trig& t, const Vec3& w) {
  const double a2 = p.a2, a3 = p.a3, m2 = p.m2, m3 = p.m3;
  const double v1 = (-4.0 / 3.0 * m2 * a2 * a2 * t.sin_2t2 - m3 * a3 * a3 * t.sin_2t23 / 3.0 -
                     m3 * a2 * a3 * t.sin_2t2_t3) * w[0] * w[1] +
                    (-m3 * a3 * a3 * t.sin_2t23 / 3.0 - m3 * a2 * a3 * t.c2 * t.s23) * w[0] * w[2];
  const double v2 = (-m3 * a2 * a3 * t.s3) * w[1] * w[2] + (-0.5 * m3 * a2 * a3 * t.s3) * w[2] * w[2] +
                    (m2 * a2 * a2 * t.sin_2t2 / 6.0 + m3 * a3 * a3 * t.sin_2t23 / 6.0 +
                     0.5 * m3 * a2 * a2 * t.sin_2t2 + 0.5 * m3 * a2 * a3 * t.sin_2t2_t3) * w[0] * w[0];
  const double v3 = 0.5 * m3 * a2 * a3 * t.s3 * w[1] * w[1] +
                    (m3 * a3 * a3 * t.sin_2t23 / 6.0 + 0.5 * m3 * a2 * a3 * t.c2 * t.s23) * w[0] * w[0];
  return {v1, v2, v3};
}

// 2x2 symmetric eigenvalues of [[a, b], [b, d]].
std::array<double, 2> sym2_eigenvalues(double a, double b, double d) {
  const double mean = 0.5 * (a + d);
  const double radius = std::hypot(0.5 * (a - d), b);
  return {mean - radius, mean + radius};
}

void require_invertible(const Mat3& m) {
  const double cond = inertia_condition(m);
  if (!(cond < kMaxInertiaCondition)) {
    throw Error(ErrorCode::SingularInertia, "inertia matrix is numerically singular (condition " + std::to_string(cond) + ")");
  }
}

}  // namespace

Mat3 inertia_matrix(const ManipulatorParams& p, const Vec3& theta, DynamicsModel model) {
  const Trig t(theta);
  const double a2 = p.a2, a3 = p.a3, m3 = p.m3;
  const double m33 = m3 * a3 * a3 / 3.0;
  const double m23 = model == DynamicsModel::ClosedForm
                         ? a3 * a3 * m3 / 3.0 + a2 * a2 * m3 + a2 * a3 * m3 * t.c3 / 3.0
                         : m3 * (a3 * a3 / 3.0 + 0.5 * a2 * a3 * t.c3);
  Mat3 m;
  m << yaw_inertia(p, t), 0.0, 0.0,
       0.0, shoulder_inertia(p, t), m23,
       0.0, m23, m33;
  return m;
}

std::array<Mat3, 3> inertia_gradient(const ManipulatorParams& p, const Vec3& theta) {
  const Trig t(theta);
  const double a2 = p.a2, a3 = p.a3, m2 = p.m2, m3 = p.m3;
  std::array<Mat3, 3> d{Mat3::Zero(), Mat3::Zero(), Mat3::Zero()};
  d[1](0, 0) = -m2 * a2 * a2 * t.sin_2t2 / 3.0 +
               m3 * (-a2 * a2 * t.sin_2t2 - a3 * a3 * t.sin_2t23 / 3.0 - a2 * a3 * t.sin_2t2_t3);
  d[2](0, 0) = m3 * (-a3 * a3 * t.sin_2t23 / 3.0 - a2 * a3 * t.c2 * t.s23);
  d[2](1, 1) = -m3 * a2 * a3 * t.s3;
  d[2](1, 2) = d[2](2, 1) = -0.5 * m3 * a2 * a3 * t.s3;
  return d;
}

Vec3 velocity_vector(const ManipulatorParams& p, const Vec3& theta, const Vec3& omega, DynamicsModel model) {
  if (model == DynamicsModel::ClosedForm) return closed_form_velocity(p, Trig(theta), omega);
  // V = Mdot omega - 0.5 d/dtheta (omega^T M omega)
  const auto dm = inertia_gradient(p, theta);
  Mat3 m_dot = Mat3::Zero();
  Vec3 half_grad;
  for (int k = 0; k < 3; ++k) {
    m_dot += dm[k] * omega[k];
    half_grad[k] = 0.5 * omega.dot(dm[k] * omega);
  }
  return m_dot * omega - half_grad;
}

Vec3 gravity_vector(const ManipulatorParams& p, const Vec3& theta) {
  const double c2 = std::cos(theta[1]);
  const double c23 = std::cos(theta[1] + theta[2]);
  const double g31 = 0.5 * p.m3 * p.g * p.a3 * c23;
  const double g21 = g31 + 0.5 * p.m2 * p.g * p.a2 * c2 + p.m3 * p.g * p.a2 * c2;
  return {0.0, g21, g31};
}

DynamicsTerms dynamics_terms(const ManipulatorParams& p, const JointState& state, DynamicsModel model) {
  return {inertia_matrix(p, state.theta, model), velocity_vector(p, state.theta, state.omega, model),
          gravity_vector(p, state.theta)};
}

TorqueCommand inverse_dynamics(const ManipulatorParams& p, const JointState& state, const Vec3& accel,
                               DynamicsModel model) {
  const auto terms = dynamics_terms(p, state, model);
  return {terms.M * accel + terms.V + terms.G};
}

Vec3 forward_dynamics(const ManipulatorParams& p, const JointState& state, const TorqueCommand& tau,
                      DynamicsModel model) {
  const auto terms = dynamics_terms(p, state, model);
  return solve_inertia(terms.M, tau.tau - terms.V - terms.G);
}

double inertia_condition(const Mat3& m) {
  const auto lower = sym2_eigenvalues(m(1, 1), m(1, 2), m(2, 2));
  const std::array<double, 3> mags{std::abs(m(0, 0)), std::abs(lower[0]), std::abs(lower[1])};
  const double hi = std::max({mags[0], mags[1], mags[2]});
  const double lo = std::min({mags[0], mags[1], mags[2]});
  if (!(lo > 0.0)) return std::numeric_limits<double>::infinity();
  return hi / lo;
}

Vec3 solve_inertia(const Mat3& m, const Vec3& rhs) {
  require_invertible(m);
  const double det = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
  return {rhs[0] / m(0, 0),
          (m(2, 2) * rhs[1] - m(1, 2) * rhs[2]) / det,
          (m(1, 1) * rhs[2] - m(2, 1) * rhs[1]) / det};
}

Mat3 inverse_inertia(const Mat3& m) {
  require_invertible(m);
  const double det = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
  Mat3 inv;
  inv << 1.0 / m(0, 0), 0.0, 0.0,
         0.0, m(2, 2) / det, -m(1, 2) / det,
         0.0, -m(2, 1) / det, m(1, 1) / det;
  return inv;
}

double kinetic_energy(const ManipulatorParams& p, const JointState& state, DynamicsModel model) {
  return 0.5 * state.omega.dot(inertia_matrix(p, state.theta, model) * state.omega);
}

double potential_energy(const ManipulatorParams& p, const Vec3& theta) {
  const double s2 = std::sin(theta[1]);
  const double s23 = std::sin(theta[1] + theta[2]);
  return p.g * (p.m2 * 0.5 * p.a2 * s2 + p.m3 * (p.a2 * s2 + 0.5 * p.a3 * s23));
}

}  // namespace armlqr
