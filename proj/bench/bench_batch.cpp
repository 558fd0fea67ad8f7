// Serial versus OpenMP batch kernels. Thread count follows OMP_NUM_THREADS.
//
//   ./bench_batch --benchmark_filter=Dynamics

#include <armlqr/batch.hpp>

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace armlqr;

const ManipulatorParams kParams = default_params();

std::vector<Vec3> poses(std::size_t n) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  std::vector<Vec3> out(n);
  for (auto& q : out) q = Vec3(u(rng), u(rng), u(rng));
  return out;
}

template <auto Kernel>
void BM_EndEffectors(benchmark::State& state) {
  const auto q = poses(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(kParams, q));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void BM_InverseKinematics(benchmark::State& state) {
  const auto targets = batch::end_effectors_serial(kParams, poses(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(kParams, targets));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void BM_Dynamics(benchmark::State& state) {
  std::vector<JointState> states;
  for (const Vec3& q : poses(static_cast<std::size_t>(state.range(0)))) states.push_back({q, 0.5 * q});
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(kParams, states, DynamicsModel::RigidBody));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void BM_Simulations(benchmark::State& state) {
  std::vector<SimConfig> configs;
  for (const Vec3& q : poses(static_cast<std::size_t>(state.range(0)))) {
    SimConfig cfg;
    cfg.controller = ControllerKind::Pid;
    cfg.duration = 0.5;
    cfg.initial = JointState::at_rest(q);
    cfg.reference = JointState::at_rest(q + Vec3::Constant(0.2));
    configs.push_back(cfg);
  }
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(kParams, configs, ControllerParams{}));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

BENCHMARK(BM_EndEffectors<batch::end_effectors_serial>)->Name("EndEffectors/serial")->Arg(1 << 16);
BENCHMARK(BM_EndEffectors<batch::end_effectors>)->Name("EndEffectors/openmp")->Arg(1 << 16)->UseRealTime();
BENCHMARK(BM_InverseKinematics<batch::inverse_kinematics_serial>)->Name("InverseKinematics/serial")->Arg(1 << 16);
BENCHMARK(BM_InverseKinematics<batch::inverse_kinematics>)->Name("InverseKinematics/openmp")->Arg(1 << 16)->UseRealTime();
BENCHMARK(BM_Dynamics<batch::dynamics_terms_serial>)->Name("Dynamics/serial")->Arg(1 << 16);
BENCHMARK(BM_Dynamics<batch::dynamics_terms>)->Name("Dynamics/openmp")->Arg(1 << 16)->UseRealTime();
BENCHMARK(BM_Simulations<batch::simulate_all_serial>)->Name("Simulations/serial")->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Simulations<batch::simulate_all>)->Name("Simulations/openmp")->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
