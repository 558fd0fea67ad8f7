#include <armlqr/config.hpp>

#include <armlqr/error.hpp>
#include <armlqr/lqr.hpp>

#include <fstream>
#include <initializer_list>
#include <string>

namespace armlqr {

namespace {

using nlohmann::json;

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::InvalidArgument, "config: " + what); }

void reject_unknown_keys(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) invalid(where + " must be an object");
  for (const auto& [key, _] : obj.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) invalid("unknown key '" + key + "' in " + where);
  }
}

double number(const json& v, const std::string& where) {
  if (!v.is_number()) invalid(where + " must be a number");
  return v.get<double>();
}

template <int N>
Eigen::Matrix<double, N, 1> vector_of(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != N) invalid(where + " must be an array of " + std::to_string(N) + " numbers");
  Eigen::Matrix<double, N, 1> out;
  for (int i = 0; i < N; ++i) out[i] = number(v[i], where + "[" + std::to_string(i) + "]");
  return out;
}

template <int N>
Eigen::Matrix<double, N, N> matrix_of(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != N) invalid(where + " must be a " + std::to_string(N) + "x" + std::to_string(N) + " array");
  Eigen::Matrix<double, N, N> out;
  for (int i = 0; i < N; ++i) out.row(i) = vector_of<N>(v[i], where + "[" + std::to_string(i) + "]").transpose();
  return out;
}

void read_manipulator(const json& m, ExperimentConfig& cfg) {
  reject_unknown_keys(m, "manipulator",
                      {"link_lengths_cm", "total_mass_kg", "link_masses_kg", "gravity_m_s2", "dynamics_model"});
  Vec3 lengths_m(cfg.params.a1, cfg.params.a2, cfg.params.a3);
  if (m.contains("link_lengths_cm")) lengths_m = cm_to_m(vector_of<3>(m["link_lengths_cm"], "link_lengths_cm"));
  const double total = m.contains("total_mass_kg") ? number(m["total_mass_kg"], "total_mass_kg") : cfg.params.m_total;
  const double g = m.contains("gravity_m_s2") ? number(m["gravity_m_s2"], "gravity_m_s2") : cfg.params.g;
  if (!(lengths_m.array() > 0.0).all()) {
    throw Error(ErrorCode::NonPositiveDimension, "config: link lengths must be positive");
  }
  cfg.params = proportional_params(lengths_m[0], lengths_m[1], lengths_m[2], total, g);
  if (m.contains("link_masses_kg")) {
    const Vec3 masses = vector_of<3>(m["link_masses_kg"], "link_masses_kg");
    cfg.params.m1 = masses[0];
    cfg.params.m2 = masses[1];
    cfg.params.m3 = masses[2];
  }
  if (m.contains("dynamics_model")) {
    const auto name = m["dynamics_model"].get<std::string>();
    if (name == "rigid_body") {
      cfg.sim.model = DynamicsModel::RigidBody;
    } else if (name == "closed_form") {
      cfg.sim.model = DynamicsModel::ClosedForm;
    } else {
      invalid("dynamics_model must be 'rigid_body' or 'closed_form'");
    }
  }
  validate_params(cfg.params);
}

JointState read_endpoint(const json& e, const std::string& where, const ManipulatorParams& p) {
  reject_unknown_keys(e, where, {"cartesian_cm", "joints_rad"});
  const bool cart = e.contains("cartesian_cm");
  const bool joints = e.contains("joints_rad");
  if (cart == joints) invalid(where + " needs exactly one of 'cartesian_cm' or 'joints_rad'");
  if (joints) return JointState::at_rest(vector_of<3>(e["joints_rad"], where + ".joints_rad"));
  return JointState::at_rest(inverse_kinematics(p, cm_to_m(vector_of<3>(e["cartesian_cm"], where + ".cartesian_cm"))));
}

ControllerKind read_controller(const json& v) {
  if (!v.is_string()) invalid("controller must be a string");
  const auto name = v.get<std::string>();
  for (auto kind : {ControllerKind::Lqr, ControllerKind::Pid, ControllerKind::OpenLoop}) {
    if (name == controller_name(kind)) return kind;
  }
  invalid("controller must be 'lqr', 'pid' or 'open_loop'");
}

void read_lqr(const json& l, LqrWeights& w) {
  reject_unknown_keys(l, "lqr", {"q_diag", "r_diag", "q", "r"});
  if (l.contains("q_diag") && l.contains("q")) invalid("lqr: give q_diag or q, not both");
  if (l.contains("r_diag") && l.contains("r")) invalid("lqr: give r_diag or r, not both");
  if (l.contains("q_diag")) w.Q = vector_of<6>(l["q_diag"], "lqr.q_diag").asDiagonal();
  if (l.contains("q")) w.Q = matrix_of<6>(l["q"], "lqr.q");
  if (l.contains("r_diag")) w.R = vector_of<3>(l["r_diag"], "lqr.r_diag").asDiagonal();
  if (l.contains("r")) w.R = matrix_of<3>(l["r"], "lqr.r");
  validate_weights(w);
}

void read_pid(const json& j, PidGains& g) {
  reject_unknown_keys(j, "pid", {"kp", "ki", "kd", "integral_limit_nm"});
  if (j.contains("kp")) g.kp = vector_of<3>(j["kp"], "pid.kp");
  if (j.contains("ki")) g.ki = vector_of<3>(j["ki"], "pid.ki");
  if (j.contains("kd")) g.kd = vector_of<3>(j["kd"], "pid.kd");
  if (j.contains("integral_limit_nm")) g.integral_limit = vector_of<3>(j["integral_limit_nm"], "pid.integral_limit_nm");
  validate_pid_gains(g);
}

void read_sim(const json& s, SimConfig& sim) {
  reject_unknown_keys(s, "sim", {"dt_s", "duration_s", "torque_limit_nm", "settling_band"});
  if (s.contains("dt_s")) sim.dt = number(s["dt_s"], "sim.dt_s");
  if (s.contains("duration_s")) sim.duration = number(s["duration_s"], "sim.duration_s");
  if (s.contains("settling_band")) sim.settling_band = number(s["settling_band"], "sim.settling_band");
  if (s.contains("torque_limit_nm") && !s["torque_limit_nm"].is_null()) {
    sim.torque_limit = vector_of<3>(s["torque_limit_nm"], "sim.torque_limit_nm");
  }
}

}  // namespace

ExperimentConfig default_experiment() {
  ExperimentConfig cfg;
  cfg.sim.initial = JointState::at_rest(inverse_kinematics(cfg.params, Point3(0.10, 0.10, 0.10)));
  cfg.sim.reference = JointState::at_rest(inverse_kinematics(cfg.params, Point3(0.15, 0.25, 0.20)));
  return cfg;
}

ExperimentConfig parse_experiment(const json& doc) try {
  reject_unknown_keys(doc, "document",
                      {"schema_version", "manipulator", "start", "goal", "controller", "lqr", "pid", "sim", "output"});
  if (!doc.contains("schema_version") || !doc["schema_version"].is_number_integer() ||
      doc["schema_version"].get<int>() != kConfigSchemaVersion) {
    invalid("schema_version must be " + std::to_string(kConfigSchemaVersion));
  }

  ExperimentConfig cfg = default_experiment();
  if (doc.contains("manipulator")) read_manipulator(doc["manipulator"], cfg);
  if (doc.contains("start")) {
    cfg.sim.initial = read_endpoint(doc["start"], "start", cfg.params);
  } else {
    cfg.sim.initial = JointState::at_rest(inverse_kinematics(cfg.params, Point3(0.10, 0.10, 0.10)));
  }
  if (doc.contains("goal")) {
    cfg.sim.reference = read_endpoint(doc["goal"], "goal", cfg.params);
  } else {
    cfg.sim.reference = JointState::at_rest(inverse_kinematics(cfg.params, Point3(0.15, 0.25, 0.20)));
  }
  if (doc.contains("controller")) cfg.sim.controller = read_controller(doc["controller"]);
  if (doc.contains("lqr")) read_lqr(doc["lqr"], cfg.controller.lqr);
  if (doc.contains("pid")) read_pid(doc["pid"], cfg.controller.pid);
  if (doc.contains("sim")) read_sim(doc["sim"], cfg.sim);
  if (doc.contains("output")) {
    reject_unknown_keys(doc["output"], "output", {"dir"});
    if (doc["output"].contains("dir")) cfg.out_dir = doc["output"]["dir"].get<std::string>();
  }
  validate_sim_config(cfg.sim);
  return cfg;
} catch (const json::exception& e) {
  invalid(e.what());
}

ExperimentConfig load_experiment(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open config file " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidArgument, "config: " + path.string() + " is not valid JSON: " + e.what());
  }
  return parse_experiment(doc);
}

}  // namespace armlqr
