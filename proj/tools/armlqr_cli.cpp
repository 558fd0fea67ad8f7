// armlqr: kinematics, LQR synthesis and closed-loop simulation of the
// three-joint articulated arm.
//
//   armlqr fk <theta1> <theta2> <theta3>        joint angles [rad] -> end effector [cm]
//   armlqr ik <x> <y> <z>                       end effector [cm] -> joint angles [rad]
//   armlqr gain     [--config f] [--out d]      LQR gain at the goal pose
//   armlqr simulate [--config f] [--out d] [--dt s] [--duration s] [--controller c]
//   armlqr compare  [--config f] [--out d] [--dt s] [--duration s]
//
// Errors go to stderr as "error[<Category>]: <message>" with exit codes
// 2 validation, 3 unreachable/singular, 4 synthesis, 5 I/O.

#include <armlqr/batch.hpp>
#include <armlqr/config.hpp>
#include <armlqr/error.hpp>
#include <armlqr/kinematics.hpp>
#include <armlqr/linearize.hpp>
#include <armlqr/lqr.hpp>
#include <armlqr/report.hpp>
#include <armlqr/sim.hpp>

#include <CLI11.hpp>

#include <array>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace armlqr;

struct Options {
  std::string config_path;
  std::string out_dir;
  std::optional<double> dt;
  std::optional<double> duration;
  std::string controller;
  std::vector<double> triple;
};

ExperimentConfig load(const Options& o) {
  ExperimentConfig cfg = o.config_path.empty() ? default_experiment() : load_experiment(o.config_path);
  if (!o.out_dir.empty()) cfg.out_dir = o.out_dir;
  if (o.dt) cfg.sim.dt = *o.dt;
  if (o.duration) cfg.sim.duration = *o.duration;
  if (!o.controller.empty()) {
    if (o.controller == "lqr") {
      cfg.sim.controller = ControllerKind::Lqr;
    } else if (o.controller == "pid") {
      cfg.sim.controller = ControllerKind::Pid;
    } else if (o.controller == "open_loop") {
      cfg.sim.controller = ControllerKind::OpenLoop;
    } else {
      throw Error(ErrorCode::InvalidArgument, "--controller must be lqr, pid or open_loop");
    }
  }
  validate_sim_config(cfg.sim);
  return cfg;
}

Vec3 triple(const Options& o) { return {o.triple[0], o.triple[1], o.triple[2]}; }

std::string row_text(const Eigen::MatrixXd& m, Eigen::Index i, int decimals) {
  std::string line;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    std::string cell = format_decimals(m(i, j), decimals);
    line += std::string(cell.size() < 12 ? 12 - cell.size() : 1, ' ') + cell;
  }
  return line;
}

int cmd_fk(const Options& o) {
  const auto cfg = load(o);
  const Point3 p = m_to_cm(end_effector(cfg.params, triple(o)));
  std::cout << "(" << format_decimals(p.x(), 4) << ", " << format_decimals(p.y(), 4) << ", "
            << format_decimals(p.z(), 4) << ") cm\n";
  return 0;
}

int cmd_ik(const Options& o) {
  const auto cfg = load(o);
  const Vec3 theta = inverse_kinematics(cfg.params, cm_to_m(triple(o)));
  std::cout << format_decimals(theta[0], 4) << ' ' << format_decimals(theta[1], 4) << ' '
            << format_decimals(theta[2], 4) << '\n';
  return 0;
}

int cmd_gain(const Options& o) {
  const auto cfg = load(o);
  const auto model = linearize_about(cfg.params, cfg.sim.reference.theta, cfg.sim.model);
  const auto gain = lqr_gain(model, cfg.controller.lqr);
  std::cout << "operating point theta [rad]: " << format_decimals(cfg.sim.reference.theta[0], 4) << ' '
            << format_decimals(cfg.sim.reference.theta[1], 4) << ' '
            << format_decimals(cfg.sim.reference.theta[2], 4) << '\n';
  std::cout << "K =\n";
  for (Eigen::Index i = 0; i < 3; ++i) std::cout << row_text(gain.K, i, 4) << '\n';
  std::cout << "S =\n";
  for (Eigen::Index i = 0; i < 6; ++i) std::cout << row_text(gain.S, i, 6) << '\n';
  std::cout << "closed-loop poles:\n";
  for (const auto& p : gain.closed_loop_poles) {
    std::cout << "  " << format_decimals(p.real(), 4) << (p.imag() < 0 ? " - " : " + ")
              << format_decimals(std::abs(p.imag()), 4) << "i\n";
  }
  std::ostringstream residual;
  residual.precision(3);
  residual << std::scientific << gain.residual;
  std::cout << "ARE residual (scaled max-norm): " << residual.str() << '\n';
  std::cout << "Newton iterations: " << gain.iterations << '\n';
  if (!o.out_dir.empty()) write_text_file(cfg.out_dir / "gain.json", dump_json(gain_json(gain)));
  return 0;
}

void print_metrics(const std::string& label, const ResponseMetrics& m) {
  std::cout << label << '\n';
  for (int j = 0; j < 3; ++j) {
    std::cout << "  theta" << j + 1 << ": settling "
              << (m.settled[j] ? format_decimals(m.settling_time[j], 3) + " s" : std::string("not settled"))
              << ", overshoot " << format_decimals(m.overshoot_pct[j], 2) << " %, peak |omega| "
              << format_decimals(m.peak_velocity[j], 3) << " rad/s\n";
  }
  std::cout << "  cost J: " << format_decimals(m.cost_J, 4) << '\n';
}

int cmd_simulate(const Options& o) {
  const auto cfg = load(o);
  const auto result = simulate(cfg.params, cfg.sim, cfg.controller);
  std::ostringstream csv;
  write_trajectory_csv(csv, result);
  write_text_file(cfg.out_dir / "trajectory.csv", csv.str());
  write_text_file(cfg.out_dir / "metrics.json", dump_json(run_json(result, cfg.sim)));
  print_metrics(std::string(controller_name(cfg.sim.controller)), result.metrics);
  std::cout << "wrote " << (cfg.out_dir / "trajectory.csv").string() << " and "
            << (cfg.out_dir / "metrics.json").string() << '\n';
  return 0;
}

int cmd_compare(const Options& o) {
  const auto cfg = load(o);
  std::array<SimConfig, 2> runs{cfg.sim, cfg.sim};
  runs[0].controller = ControllerKind::Lqr;
  runs[1].controller = ControllerKind::Pid;
  const auto results = batch::simulate_all(cfg.params, runs, cfg.controller);
  write_text_file(cfg.out_dir / "compare.json",
                  dump_json(compare_json(results[0], runs[0], results[1], runs[1])));
  print_metrics("lqr", results[0].metrics);
  print_metrics("pid", results[1].metrics);
  std::cout << "wrote " << (cfg.out_dir / "compare.json").string() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kinematics, LQR synthesis and point-to-point simulation of a 3-DoF articulated arm"};
  app.require_subcommand(1);
  Options o;

  const auto add_config = [&](CLI::App* sub) {
    sub->add_option("--config", o.config_path, "Experiment config (JSON, schema_version 1)");
  };
  const auto add_run_flags = [&](CLI::App* sub) {
    add_config(sub);
    sub->add_option("--out", o.out_dir, "Output directory");
    sub->add_option("--dt", o.dt, "Integration step [s]");
    sub->add_option("--duration", o.duration, "Simulated time [s]");
  };

  auto* fk = app.add_subcommand("fk", "Joint angles [rad] -> end-effector position [cm]");
  fk->add_option("theta", o.triple, "theta1 theta2 theta3")->expected(3)->required();
  add_config(fk);
  auto* ik = app.add_subcommand("ik", "End-effector position [cm] -> joint angles [rad], elbow-up");
  ik->add_option("point", o.triple, "x y z")->expected(3)->required();
  add_config(ik);
  auto* gain = app.add_subcommand("gain", "Synthesize the LQR gain at the goal pose");
  add_config(gain);
  gain->add_option("--out", o.out_dir, "Also write gain.json to this directory");
  auto* sim = app.add_subcommand("simulate", "Closed-loop run; writes trajectory.csv and metrics.json");
  add_run_flags(sim);
  sim->add_option("--controller", o.controller, "lqr | pid | open_loop");
  auto* cmp = app.add_subcommand("compare", "LQR and PID on the same move; writes compare.json");
  add_run_flags(cmp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (fk->parsed()) return cmd_fk(o);
    if (ik->parsed()) return cmd_ik(o);
    if (gain->parsed()) return cmd_gain(o);
    if (sim->parsed()) return cmd_simulate(o);
    if (cmp->parsed()) return cmd_compare(o);
  } catch (const Error& e) {
    std::cerr << "error[" << error_name(e.code()) << "]: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error[Internal]: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
