#include <armlqr/sim.hpp>

#include <armlqr/error.hpp>
#include <armlqr/linearize.hpp>

#include <cmath>
#include <string>

namespace armlqr {

namespace {

// rad/s; far above anything the arm reaches, well below overflow.
constexpr double kDivergenceVelocity = 1e6;

}  // namespace

std::string_view controller_name(ControllerKind kind) noexcept {
  switch (kind) {
    case ControllerKind::Lqr: return "lqr";
    case ControllerKind::Pid: return "pid";
    case ControllerKind::OpenLoop: return "open_loop";
  }
  return "unknown";
}

void validate_sim_config(const SimConfig& cfg) {
  if (!(cfg.dt > 0.0 && cfg.dt <= 0.01)) {
    throw Error(ErrorCode::InvalidArgument, "dt must lie in (0, 0.01] s, got " + std::to_string(cfg.dt));
  }
  if (!(std::isfinite(cfg.duration) && cfg.duration >= cfg.dt)) {
    throw Error(ErrorCode::InvalidArgument, "duration must be at least dt");
  }
  if (!(cfg.settling_band > 0.0 && cfg.settling_band < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "settling band must lie in (0, 1)");
  }
  validate_state(cfg.initial);
  validate_state(cfg.reference);
  if (cfg.torque_limit && !(cfg.torque_limit->array() > 0.0).all()) {
    throw Error(ErrorCode::InvalidArgument, "torque limits must be positive");
  }
}

JointState rk4_step(const ManipulatorParams& p, const JointState& state, const TorqueCommand& tau, double dt,
                    DynamicsModel model) {
  const auto f = [&](const Vec6& x) -> Vec6 {
    const JointState s = JointState::from_stacked(x);
    Vec6 dx;
    dx << s.omega, forward_dynamics(p, s, tau, model);
    return dx;
  };
  const Vec6 x = state.stacked();
  const Vec6 k1 = f(x);
  const Vec6 k2 = f(x + 0.5 * dt * k1);
  const Vec6 k3 = f(x + 0.5 * dt * k2);
  const Vec6 k4 = f(x + dt * k3);
  return JointState::from_stacked(x + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
}

long step_count(const SimConfig& cfg) { return std::lround(cfg.duration / cfg.dt); }

SimResult simulate(const ManipulatorParams& p, const SimConfig& cfg, const ControllerParams& ctrl) {
  validate_params(p);
  validate_sim_config(cfg);
  validate_weights(ctrl.lqr);

  SimResult result;
  const TorqueCommand feedforward = equilibrium_torque(p, cfg.reference.theta);
  if (cfg.controller == ControllerKind::Lqr) {
    try {
      result.gain = lqr_gain(linearize_about(p, cfg.reference.theta, cfg.model), ctrl.lqr);
    } catch (const Error& e) {
      throw Error(ErrorCode::ControllerSynthesisFailed, std::string("LQR synthesis failed: ") + e.what());
    }
  } else if (cfg.controller == ControllerKind::Pid) {
    validate_pid_gains(ctrl.pid);
  }

  const long steps = step_count(cfg);
  result.times.reserve(steps + 1);
  result.states.reserve(steps + 1);
  result.torques.reserve(steps + 1);

  std::vector<CostSample> cost;
  cost.reserve(steps);
  const Vec6 x_ref = cfg.reference.stacked();
  Vec3 integral = Vec3::Zero();
  JointState state = cfg.initial;
  for (long i = 0; i <= steps; ++i) {
    TorqueCommand tau;
    switch (cfg.controller) {
      case ControllerKind::Lqr:
        tau = lqr_control(*result.gain, state, cfg.reference, feedforward);
        break;
      case ControllerKind::Pid: {
        const auto out = pid_control(ctrl.pid, state, cfg.reference, integral, cfg.dt, feedforward);
        tau = out.torque;
        integral = out.integral;
        break;
      }
      case ControllerKind::OpenLoop:
        tau = feedforward;
        break;
    }
    if (cfg.torque_limit) tau.tau = tau.tau.cwiseMax(-*cfg.torque_limit).cwiseMin(*cfg.torque_limit);

    result.times.push_back(static_cast<double>(i) * cfg.dt);
    result.states.push_back(state);
    result.torques.push_back(tau);
    if (i == steps) break;

    cost.push_back({state.stacked() - x_ref, tau.tau - feedforward.tau, cfg.dt});
    state = rk4_step(p, state, tau, cfg.dt, cfg.model);
    if (!state.finite() || state.omega.cwiseAbs().maxCoeff() > kDivergenceVelocity) {
      throw Error(ErrorCode::NumericalDivergence,
                  "state became non-finite at t = " + std::to_string(static_cast<double>(i + 1) * cfg.dt) +
                      " s; reduce dt");
    }
  }

  result.metrics = compute_metrics(result.times, result.states, cfg.reference, cfg.settling_band);
  result.metrics.cost_J = quadratic_cost(cost, ctrl.lqr);
  return result;
}

}  // namespace armlqr
