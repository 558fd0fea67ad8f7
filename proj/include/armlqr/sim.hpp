#pragma once

#include <armlqr/dynamics.hpp>
#include <armlqr/lqr.hpp>
#include <armlqr/metrics.hpp>
#include <armlqr/model.hpp>
#include <armlqr/pid.hpp>

#include <optional>
#include <string_view>
#include <vector>

namespace armlqr {

enum class ControllerKind { Lqr, Pid, OpenLoop };

std::string_view controller_name(ControllerKind kind) noexcept;

/// Fixed-step closed-loop run. The default step is 0.1 ms: the LQR loop with
/// the default weights has a closed-loop pole near -1.9e4 1/s, which a 1 ms
/// zero-order hold cannot keep stable.
struct SimConfig {
  double dt = 1e-4;
  double duration = 5.0;
  ControllerKind controller = ControllerKind::Lqr;
  JointState initial;
  JointState reference;
  std::optional<Vec3> torque_limit;
  DynamicsModel model = DynamicsModel::RigidBody;
  double settling_band = kDefaultSettlingBand;
};

/// Controller tuning; only the block matching SimConfig::controller is used
/// for control, the LQR weights also score every run's cost_J.
struct ControllerParams {
  LqrWeights lqr = default_weights();
  PidGains pid = default_pid_gains();
};

struct SimResult {
  std::vector<double> times;
  std::vector<JointState> states;
  /// torques[i] is held over [times[i], times[i+1]); the last entry is the
  /// controller output at the final state.
  std::vector<TorqueCommand> torques;
  ResponseMetrics metrics;
  std::optional<LqrGain> gain;
};

/// Throws Error{InvalidArgument} unless 0 < dt <= 0.01, duration >= dt and
/// endpoints, band and limits are sane.
void validate_sim_config(const SimConfig& cfg);

/// Classical RK4 on (theta, omega) with tau held constant over the step.
JointState rk4_step(const ManipulatorParams& p, const JointState& state, const TorqueCommand& tau, double dt,
                    DynamicsModel model = DynamicsModel::RigidBody);

/// Number of integration steps: round(duration / dt).
long step_count(const SimConfig& cfg);

/// Runs the closed loop from cfg.initial toward cfg.reference. Every
/// controller adds the gravity-holding torque at the reference as
/// feedforward; the LQR gain is synthesized about the reference pose.
///
/// Throws Error{ControllerSynthesisFailed} if the LQR gain cannot be built,
/// Error{SingularInertia} from the plant, and Error{NumericalDivergence} if
/// the state stops being finite.
SimResult simulate(const ManipulatorParams& p, const SimConfig& cfg, const ControllerParams& ctrl = {});

}  // namespace armlqr
