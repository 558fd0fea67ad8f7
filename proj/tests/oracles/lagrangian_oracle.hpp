#pragma once

// Test-only equations of motion built from energies alone.
//
// Kinetic energy is integrated along each link treated as a uniform slender
// rod (3-point Gauss-Legendre, exact for the quadratic integrand); point
// velocities come from five-point differences of the rod point positions.
// M follows from polarization of the kinetic energy, V from finite
// differences of M (Christoffel form) and G from finite differences of the
// potential energy. Nothing here calls into dynamics.cpp.

#include <armlqr/model.hpp>
#include <armlqr/types.hpp>

#include <array>
#include <cmath>

namespace armlqr::oracle {

// Fourth-order central difference of f along coordinate k.
template <typename F>
auto five_point(const F& f, const Vec3& q, int k, double h) {
  using Value = decltype(f(q));
  auto at = [&](double offset) -> Value {
    Vec3 x = q;
    x[k] += offset;
    return f(x);
  };
  return Value((at(-2 * h) - 8.0 * at(-h) + 8.0 * at(h) - at(2 * h)) / (12.0 * h));
}

// Point at fraction s in [0, 1] along link `link` (2 or 3).
inline Vec3 rod_point(const ManipulatorParams& p, const Vec3& q, int link, double s) {
  const double c1 = std::cos(q[0]), s1 = std::sin(q[0]);
  const Vec3 dir2(c1 * std::cos(q[1]), s1 * std::cos(q[1]), std::sin(q[1]));
  const Vec3 dir3(c1 * std::cos(q[1] + q[2]), s1 * std::cos(q[1] + q[2]), std::sin(q[1] + q[2]));
  const Vec3 shoulder(0.0, 0.0, p.a1);
  if (link == 2) return shoulder + s * p.a2 * dir2;
  return shoulder + p.a2 * dir2 + s * p.a3 * dir3;
}

inline Vec3 rod_velocity(const ManipulatorParams& p, const Vec3& q, const Vec3& w, int link, double s) {
  Vec3 v = Vec3::Zero();
  const auto point = [&](const Vec3& x) -> Vec3 { return rod_point(p, x, link, s); };
  for (int k = 0; k < 3; ++k) v += five_point(point, q, k, 1e-3) * w[k];
  return v;
}

// Yaw inertia of the base column: a modeling input, not derivable from a rod
// spinning about its own axis.
inline double base_yaw_inertia(const ManipulatorParams& p) { return 0.5 * p.m1 * (p.a1 * p.a1 + p.a2 * p.a2); }

inline double kinetic_energy(const ManipulatorParams& p, const Vec3& q, const Vec3& w) {
  static constexpr std::array<double, 3> nodes{0.1127016653792583, 0.5, 0.8872983346207417};
  static constexpr std::array<double, 3> weights{5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0};
  double ke = 0.5 * base_yaw_inertia(p) * w[0] * w[0];
  for (int link : {2, 3}) {
    const double mass = link == 2 ? p.m2 : p.m3;
    for (int i = 0; i < 3; ++i) ke += 0.5 * mass * weights[i] * oracle::rod_velocity(p, q, w, link, nodes[i]).squaredNorm();
  }
  return ke;
}

inline double potential_energy(const ManipulatorParams& p, const Vec3& q) {
  // Uniform rods: the mean height is the midpoint height.
  return p.g * (p.m2 * rod_point(p, q, 2, 0.5).z() + p.m3 * rod_point(p, q, 3, 0.5).z());
}

inline Mat3 inertia(const ManipulatorParams& p, const Vec3& q) {
  Mat3 m;
  const Mat3 eye = Mat3::Identity();
  for (int i = 0; i < 3; ++i) m(i, i) = 2.0 * oracle::kinetic_energy(p, q, eye.col(i));
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      m(i, j) = m(j, i) = oracle::kinetic_energy(p, q, eye.col(i) + eye.col(j)) - 0.5 * (m(i, i) + m(j, j));
    }
  }
  return m;
}

inline Vec3 velocity(const ManipulatorParams& p, const Vec3& q, const Vec3& w) {
  std::array<Mat3, 3> dm;
  const auto m = [&](const Vec3& x) -> Mat3 { return oracle::inertia(p, x); };
  for (int k = 0; k < 3; ++k) dm[k] = five_point(m, q, k, 1e-3);
  Vec3 v = Vec3::Zero();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) v[i] += (dm[k](i, j) - 0.5 * dm[i](j, k)) * w[j] * w[k];
    }
  }
  return v;
}

inline Vec3 gravity(const ManipulatorParams& p, const Vec3& q) {
  Vec3 g;
  const auto u = [&](const Vec3& x) { return oracle::potential_energy(p, x); };
  for (int k = 0; k < 3; ++k) g[k] = five_point(u, q, k, 1e-3);
  return g;
}

}  // namespace armlqr::oracle
