#include <armlqr/batch.hpp>

#include <omp.h>

#include <exception>
#include <limits>

namespace armlqr::batch {

namespace {

IkResult ik_one(const ManipulatorParams& p, const Point3& target) {
  try {
    return {inverse_kinematics(p, target), std::nullopt};
  } catch (const Error& e) {
    return {Vec3::Constant(std::numeric_limits<double>::quiet_NaN()), e.code()};
  }
}

template <typename Out, typename In, typename F>
std::vector<Out> map_parallel(std::span<const In> in, F&& f) {
  std::vector<Out> out(in.size());
  const auto n = static_cast<std::ptrdiff_t>(in.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = f(in[i]);
  return out;
}

template <typename Out, typename In, typename F>
std::vector<Out> map_serial(std::span<const In> in, F&& f) {
  std::vector<Out> out(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) out[i] = f(in[i]);
  return out;
}

// Exceptions cannot cross an OpenMP region; park them per slot.
template <bool Parallel>
std::vector<SimResult> run_all(const ManipulatorParams& p, std::span<const SimConfig> configs,
                               const ControllerParams& ctrl) {
  std::vector<SimResult> results(configs.size());
  std::vector<std::exception_ptr> errors(configs.size());
  const auto n = static_cast<std::ptrdiff_t>(configs.size());
#pragma omp parallel for schedule(dynamic) if (Parallel)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      results[i] = simulate(p, configs[i], ctrl);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace

int thread_count() { return omp_get_max_threads(); }

std::vector<Point3> end_effectors(const ManipulatorParams& p, std::span<const Vec3> thetas) {
  return map_parallel<Point3>(thetas, [&](const Vec3& t) { return end_effector(p, t); });
}

std::vector<Point3> end_effectors_serial(const ManipulatorParams& p, std::span<const Vec3> thetas) {
  return map_serial<Point3>(thetas, [&](const Vec3& t) { return end_effector(p, t); });
}

std::vector<IkResult> inverse_kinematics(const ManipulatorParams& p, std::span<const Point3> targets) {
  return map_parallel<IkResult>(targets, [&](const Point3& t) { return ik_one(p, t); });
}

std::vector<IkResult> inverse_kinematics_serial(const ManipulatorParams& p, std::span<const Point3> targets) {
  return map_serial<IkResult>(targets, [&](const Point3& t) { return ik_one(p, t); });
}

std::vector<DynamicsTerms> dynamics_terms(const ManipulatorParams& p, std::span<const JointState> states,
                                          DynamicsModel model) {
  return map_parallel<DynamicsTerms>(states, [&](const JointState& s) { return armlqr::dynamics_terms(p, s, model); });
}

std::vector<DynamicsTerms> dynamics_terms_serial(const ManipulatorParams& p, std::span<const JointState> states,
                                                 DynamicsModel model) {
  return map_serial<DynamicsTerms>(states, [&](const JointState& s) { return armlqr::dynamics_terms(p, s, model); });
}

std::vector<SimResult> simulate_all(const ManipulatorParams& p, std::span<const SimConfig> configs,
                                    const ControllerParams& ctrl) {
  return run_all<true>(p, configs, ctrl);
}

std::vector<SimResult> simulate_all_serial(const ManipulatorParams& p, std::span<const SimConfig> configs,
                                           const ControllerParams& ctrl) {
  return run_all<false>(p, configs, ctrl);
}

}  // namespace armlqr::batch
