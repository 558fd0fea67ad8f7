#pragma once

#include <armlqr/dynamics.hpp>
#include <armlqr/error.hpp>
#include <armlqr/kinematics.hpp>
#include <armlqr/sim.hpp>

#include <optional>
#include <span>
#include <vector>

/// Element-wise kernels over many configurations.
///
/// Each kernel has an OpenMP version and a `_serial` reference. Both call the
/// same per-element code, so their outputs are bit-identical; the serial
/// versions exist for tests and for the benchmark baseline.
namespace armlqr::batch {

/// Number of OpenMP threads the parallel kernels will use.
int thread_count();

std::vector<Point3> end_effectors(const ManipulatorParams& p, std::span<const Vec3> thetas);
std::vector<Point3> end_effectors_serial(const ManipulatorParams& p, std::span<const Vec3> thetas);

/// IK outcome for one target; `error` is set instead of throwing.
struct IkResult {
  Vec3 theta = Vec3::Zero();
  std::optional<ErrorCode> error;
};

std::vector<IkResult> inverse_kinematics(const ManipulatorParams& p, std::span<const Point3> targets);
std::vector<IkResult> inverse_kinematics_serial(const ManipulatorParams& p, std::span<const Point3> targets);

std::vector<DynamicsTerms> dynamics_terms(const ManipulatorParams& p, std::span<const JointState> states,
                                          DynamicsModel model = DynamicsModel::RigidBody);
std::vector<DynamicsTerms> dynamics_terms_serial(const ManipulatorParams& p, std::span<const JointState> states,
                                                 DynamicsModel model = DynamicsModel::RigidBody);

/// Independent closed-loop runs. The first failing run's Error is rethrown
/// after all runs finish.
std::vector<SimResult> simulate_all(const ManipulatorParams& p, std::span<const SimConfig> configs,
                                    const ControllerParams& ctrl = {});
std::vector<SimResult> simulate_all_serial(const ManipulatorParams& p, std::span<const SimConfig> configs,
                                           const ControllerParams& ctrl = {});

}  // namespace armlqr::batch
