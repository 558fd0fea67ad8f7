#include <armlqr/dynamics.hpp>
#include <armlqr/error.hpp>
#include <armlqr/linearize.hpp>
#include <armlqr/metrics.hpp>
#include <armlqr/sim.hpp>

#include <gtest/gtest.h>

#include "test_support.hpp"

#include <cmath>

using namespace armlqr;
using armlqr::fixtures::kReachGoal;
using armlqr::fixtures::kReachStart;

namespace {

const ManipulatorParams kParams = default_params();

SimConfig reach_move(ControllerKind kind) {
  SimConfig cfg;
  cfg.controller = kind;
  cfg.initial = JointState::at_rest(kReachStart);
  cfg.reference = JointState::at_rest(kReachGoal);
  return cfg;
}

// Unforced pendulum swing about the hanging pose for 1 s, from rest.
Vec6 free_swing(double dt) {
  JointState s = JointState::at_rest({0.0, -kPi / 2 + 0.2, 0.1});
  const long n = std::lround(1.0 / dt);
  for (long k = 0; k < n; ++k) s = rk4_step(kParams, s, {}, dt);
  return s.stacked();
}

struct Synthetic {
  std::vector<double> t;
  std::vector<JointState> x;
};

template <typename F>
Synthetic sample(F theta1, double dt, double duration) {
  Synthetic s;
  const long n = std::lround(duration / dt);
  for (long k = 0; k <= n; ++k) {
    const double t = k * dt;
    s.t.push_back(t);
    s.x.push_back(JointState::at_rest({theta1(t), 0.0, 0.0}));
  }
  return s;
}

}  // namespace

TEST(Rk4, EquilibriumIsFixedPoint) {
  for (const Vec3& q : {Vec3(0.3, -0.2, 0.8), kReachGoal, Vec3(0, kPi / 2, 0)}) {
    const JointState s = JointState::at_rest(q);
    const JointState next = rk4_step(kParams, s, equilibrium_torque(kParams, q), 1e-3);
    EXPECT_LT((next.stacked() - s.stacked()).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Rk4, ConstantVelocityIsExact) {
  const JointState s{{0.2, -0.4, 0.7}, {1.0, 0.0, 0.0}};
  const TorqueCommand tau = inverse_dynamics(kParams, s, Vec3::Zero());
  const double dt = 1e-3;
  const JointState next = rk4_step(kParams, s, tau, dt);
  EXPECT_NEAR(next.theta[0] - s.theta[0], dt, 1e-12);
  EXPECT_LT((next.omega - s.omega).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Rk4, FourthOrderConvergence) {
  const Vec6 ref = free_swing(1e-5);
  const double e1 = (free_swing(1e-3) - ref).cwiseAbs().maxCoeff();
  const double e2 = (free_swing(5e-4) - ref).cwiseAbs().maxCoeff();
  const double order = std::log2(e1 / e2);
  RecordProperty("measured_order", std::to_string(order));
  EXPECT_NEAR(order, 4.0, 0.3);
}

TEST(Rk4, FreeSwingConservesEnergy) {
  // Diagnostic: rigid-body energy drift over 1 s of free swing.
  JointState s = JointState::at_rest({0.0, 0.3, 0.5});
  auto energy = [](const JointState& x) { return kinetic_energy(kParams, x) + potential_energy(kParams, x.theta); };
  const double e0 = energy(s);
  for (int k = 0; k < 1000; ++k) s = rk4_step(kParams, s, {}, 1e-3);
  const double drift = std::abs(energy(s) - e0) / std::abs(e0);
  RecordProperty("relative_energy_drift", std::to_string(drift));
  EXPECT_LT(drift, 1e-6);
}

TEST(Simulate, ReachMoveLqrSettlesWithoutOvershoot) {
  const SimConfig cfg = reach_move(ControllerKind::Lqr);
  const SimResult r = simulate(kParams, cfg);
  ASSERT_EQ(r.times.size(), static_cast<std::size_t>(step_count(cfg) + 1));
  ASSERT_EQ(r.states.size(), r.times.size());
  ASSERT_EQ(r.torques.size(), r.times.size());
  ASSERT_TRUE(r.gain.has_value());
  for (int j = 0; j < 3; ++j) {
    EXPECT_TRUE(r.metrics.settled[j]);
    EXPECT_LE(r.metrics.overshoot_pct[j], 0.5);
    EXPECT_LT(r.metrics.steady_state_error[j], 1e-3);
  }
  EXPECT_GT(r.metrics.cost_J, 0.0);
  EXPECT_EQ(r.states.front().theta, kReachStart);
}

TEST(Simulate, OpenLoopHoldIsStatic) {
  SimConfig cfg;
  cfg.controller = ControllerKind::OpenLoop;
  cfg.initial = cfg.reference = JointState::at_rest(Vec3(0.4, 0.3, -0.6));
  cfg.duration = 1.0;
  const SimResult r = simulate(kParams, cfg);
  for (const JointState& s : r.states) {
    EXPECT_LT((s.stacked() - cfg.initial.stacked()).cwiseAbs().maxCoeff(), 1e-9);
  }
  EXPECT_EQ(r.metrics.settling_time, Vec3::Zero());
}

TEST(Simulate, Deterministic) {
  SimConfig cfg = reach_move(ControllerKind::Pid);
  cfg.duration = 1.0;
  const SimResult a = simulate(kParams, cfg), b = simulate(kParams, cfg);
  ASSERT_EQ(a.states.size(), b.states.size());
  for (std::size_t i = 0; i < a.states.size(); ++i) {
    ASSERT_EQ(a.states[i].theta, b.states[i].theta);
    ASSERT_EQ(a.torques[i].tau, b.torques[i].tau);
  }
}

TEST(Simulate, TorqueLimitIsRespected) {
  SimConfig cfg = reach_move(ControllerKind::Lqr);
  cfg.duration = 0.5;
  cfg.torque_limit = Vec3::Constant(3.0);
  const SimResult r = simulate(kParams, cfg);
  for (const TorqueCommand& t : r.torques) EXPECT_LE(t.tau.cwiseAbs().maxCoeff(), 3.0);
}

TEST(Simulate, CoarseStepDivergesLoudly) {
  SimConfig cfg = reach_move(ControllerKind::Lqr);
  cfg.dt = 1e-3;
  try {
    simulate(kParams, cfg);
    FAIL() << "expected NumericalDivergence";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NumericalDivergence);
  }
}

TEST(Simulate, ConfigValidation) {
  SimConfig cfg = reach_move(ControllerKind::Lqr);
  EXPECT_NO_THROW(validate_sim_config(cfg));
  for (double dt : {0.0, -1e-3, 0.02, std::nan("")}) {
    SimConfig bad = cfg;
    bad.dt = dt;
    EXPECT_THROW(validate_sim_config(bad), Error) << dt;
  }
  SimConfig short_run = cfg;
  short_run.duration = 1e-5;
  EXPECT_THROW(validate_sim_config(short_run), Error);
  SimConfig bad_band = cfg;
  bad_band.settling_band = 0.0;
  EXPECT_THROW(validate_sim_config(bad_band), Error);
  EXPECT_EQ(step_count(cfg), 50000);
}

TEST(Simulate, SingularWeightsFailSynthesis) {
  SimConfig cfg = reach_move(ControllerKind::Lqr);
  ControllerParams ctrl;
  ctrl.lqr.R.setZero();
  try {
    simulate(kParams, cfg, ctrl);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(exit_code(e.code()), exit_code(ErrorCode::InvalidArgument));
  }
}

TEST(Metrics, AlreadyAtReference) {
  const Synthetic s = sample([](double) { return 0.5; }, 1e-3, 1.0);
  JointState ref = JointState::at_rest({0.5, 0.0, 0.0});
  const ResponseMetrics m = compute_metrics(s.t, s.x, ref);
  EXPECT_EQ(m.settling_time, Vec3::Zero());
  EXPECT_EQ(m.overshoot_pct, Vec3::Zero());
  EXPECT_TRUE(m.zero_step[0]);
}

TEST(Metrics, FirstOrderSettling) {
  const double tc = 0.3;
  const Synthetic s = sample([&](double t) { return 1.0 - std::exp(-t / tc); }, 1e-3, 3.0);
  const ResponseMetrics m = compute_metrics(s.t, s.x, JointState::at_rest({1.0, 0.0, 0.0}));
  EXPECT_NEAR(m.settling_time[0], std::log(50.0) * tc, 1e-4);
  EXPECT_NEAR(m.settling_time[0], 1.174, 1e-3);
  EXPECT_EQ(m.overshoot_pct[0], 0.0);
  EXPECT_FALSE(m.zero_step[0]);
  EXPECT_TRUE(m.zero_step[1]);
}

TEST(Metrics, DampedSinusoidOvershoot) {
  // Underdamped second-order step with a 10 % first peak.
  const double zeta = -std::log(0.1) / std::sqrt(kPi * kPi + std::log(0.1) * std::log(0.1));
  const double wn = 5.0, wd = wn * std::sqrt(1 - zeta * zeta), phi = std::acos(zeta);
  auto y = [&](double t) { return 1.0 - std::exp(-zeta * wn * t) * std::sin(wd * t + phi) / std::sqrt(1 - zeta * zeta); };
  const Synthetic s = sample(y, 1e-4, 5.0);
  const ResponseMetrics m = compute_metrics(s.t, s.x, JointState::at_rest({1.0, 0.0, 0.0}));
  EXPECT_NEAR(zeta, 0.5912, 1e-4);
  EXPECT_NEAR(m.overshoot_pct[0], 10.0, 0.1);
}

TEST(Metrics, NotSettledIsInfinite) {
  const Synthetic s = sample([](double t) { return t; }, 1e-2, 1.0);
  const ResponseMetrics m = compute_metrics(s.t, s.x, JointState::at_rest({5.0, 0.0, 0.0}));
  EXPECT_FALSE(m.settled[0]);
  EXPECT_TRUE(std::isinf(m.settling_time[0]));
}

TEST(Metrics, RejectsBadInput) {
  std::vector<double> t{0.0, 1.0};
  std::vector<JointState> x(1);
  EXPECT_THROW(compute_metrics(t, x, {}), Error);
  EXPECT_THROW(compute_metrics({}, {}, {}), Error);
}

TEST(Metrics, StableUnderResampling) {
  SimConfig cfg = reach_move(ControllerKind::Lqr);
  cfg.duration = 3.0;
  const SimResult r = simulate(kParams, cfg);
  // Keep every fourth sample: settling should move by less than 1 %.
  std::vector<double> t;
  std::vector<JointState> x;
  for (std::size_t i = 0; i < r.times.size(); i += 4) {
    t.push_back(r.times[i]);
    x.push_back(r.states[i]);
  }
  const ResponseMetrics coarse = compute_metrics(t, x, cfg.reference);
  for (int j = 0; j < 3; ++j) {
    EXPECT_NEAR(coarse.settling_time[j], r.metrics.settling_time[j], 0.01 * r.metrics.settling_time[j]);
  }
}
