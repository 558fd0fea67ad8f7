#include <armlqr/batch.hpp>
#include <armlqr/error.hpp>

#include <gtest/gtest.h>

#include "test_support.hpp"

#include <cstring>
#include <random>

using namespace armlqr;

namespace {

const ManipulatorParams kParams = default_params();

std::vector<Vec3> random_poses(int n) {
  std::mt19937_64 rng(21);
  std::vector<Vec3> out;
  for (int i = 0; i < n; ++i) out.push_back(fixtures::random_joints(rng));
  return out;
}

}  // namespace

TEST(Batch, ThreadCountPositive) { EXPECT_GE(batch::thread_count(), 1); }

TEST(Batch, EndEffectorsBitIdentical) {
  const auto poses = random_poses(4096);
  const auto par = batch::end_effectors(kParams, poses);
  const auto ser = batch::end_effectors_serial(kParams, poses);
  ASSERT_EQ(par.size(), ser.size());
  for (std::size_t i = 0; i < par.size(); ++i) ASSERT_EQ(par[i], ser[i]);
}

TEST(Batch, InverseKinematicsBitIdenticalWithPerElementErrors) {
  auto targets = batch::end_effectors_serial(kParams, random_poses(2048));
  targets.push_back({1.0, 1.0, 1.0});
  targets.push_back({0.0, 0.0, 0.4});
  const auto par = batch::inverse_kinematics(kParams, targets);
  const auto ser = batch::inverse_kinematics_serial(kParams, targets);
  for (std::size_t i = 0; i < par.size(); ++i) {
    ASSERT_EQ(par[i].error, ser[i].error);
    // Failed solves carry NaN angles, so compare bits rather than values.
    ASSERT_EQ(std::memcmp(par[i].theta.data(), ser[i].theta.data(), sizeof(double) * 3), 0);
  }
  EXPECT_EQ(par[par.size() - 2].error, ErrorCode::Unreachable);
  EXPECT_EQ(par.back().error, ErrorCode::SingularTarget);
}

TEST(Batch, DynamicsBitIdentical) {
  std::vector<JointState> states;
  for (const Vec3& q : random_poses(2048)) states.push_back({q, 0.5 * q});
  for (DynamicsModel m : {DynamicsModel::RigidBody, DynamicsModel::ClosedForm}) {
    const auto par = batch::dynamics_terms(kParams, states, m);
    const auto ser = batch::dynamics_terms_serial(kParams, states, m);
    for (std::size_t i = 0; i < par.size(); ++i) {
      ASSERT_EQ(par[i].M, ser[i].M);
      ASSERT_EQ(par[i].V, ser[i].V);
      ASSERT_EQ(par[i].G, ser[i].G);
    }
  }
}

TEST(Batch, SimulationsBitIdentical) {
  std::vector<SimConfig> configs;
  for (ControllerKind k : {ControllerKind::Lqr, ControllerKind::Pid, ControllerKind::OpenLoop}) {
    SimConfig cfg;
    cfg.controller = k;
    cfg.duration = 0.2;
    cfg.initial = JointState::at_rest(fixtures::kReachStart);
    cfg.reference = JointState::at_rest(fixtures::kReachGoal);
    configs.push_back(cfg);
  }
  const auto par = batch::simulate_all(kParams, configs);
  const auto ser = batch::simulate_all_serial(kParams, configs);
  for (std::size_t r = 0; r < par.size(); ++r) {
    ASSERT_EQ(par[r].states.size(), ser[r].states.size());
    for (std::size_t i = 0; i < par[r].states.size(); ++i) ASSERT_EQ(par[r].states[i].stacked(), ser[r].states[i].stacked());
  }
}

TEST(Batch, SimulationErrorPropagates) {
  std::vector<SimConfig> configs(2);
  configs[1].dt = -1.0;
  EXPECT_THROW(batch::simulate_all(kParams, configs), Error);
}
