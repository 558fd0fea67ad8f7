#include <armlqr/report.hpp>

#include <armlqr/error.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace armlqr {

namespace {

using nlohmann::json;

json vec_json(const Vec3& v) { return json::array({v[0], v[1], v[2]}); }

// Infinite settling times become null.
json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json matrix_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

std::string format_decimals(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  std::string s(buf);
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::string format_fixed9(double v) {
  if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  if (std::abs(v) < 1e-12) return "0";
  const int magnitude = static_cast<int>(std::floor(std::log10(std::abs(v))));
  const int decimals = std::clamp(8 - magnitude, 0, 12);
  std::string s = format_decimals(v, decimals);
  if (s.find('.') != std::string::npos) {
    s.erase(s.find_last_not_of('0') + 1);
    if (s.back() == '.') s.pop_back();
  }
  return s == "-0" ? "0" : s;
}

void write_trajectory_csv(std::ostream& out, const SimResult& result) {
  out << kTrajectoryHeader << '\n';
  std::string line;
  for (std::size_t i = 0; i < result.times.size(); ++i) {
    const auto& s = result.states[i];
    const auto& tau = result.torques[i].tau;
    line = format_fixed9(result.times[i]);
    for (double v : {s.theta[0], s.theta[1], s.theta[2], s.omega[0], s.omega[1], s.omega[2], tau[0], tau[1], tau[2]}) {
      line += ',';
      line += format_fixed9(v);
    }
    out << line << '\n';
  }
}

json metrics_json(const ResponseMetrics& m) {
  json settling = json::array();
  for (int j = 0; j < 3; ++j) settling.push_back(finite_or_null(m.settling_time[j]));
  return {
      {"settling_time_s", settling},
      {"settled", json::array({m.settled[0], m.settled[1], m.settled[2]})},
      {"overshoot_pct", vec_json(m.overshoot_pct)},
      {"zero_step", json::array({m.zero_step[0], m.zero_step[1], m.zero_step[2]})},
      {"peak_velocity_rad_s", vec_json(m.peak_velocity)},
      {"steady_state_error_rad", vec_json(m.steady_state_error)},
      {"cost_J", m.cost_J},
      {"all_settled", m.settled[0] && m.settled[1] && m.settled[2]},
  };
}

json run_json(const SimResult& result, const SimConfig& cfg) {
  json doc = {
      {"controller", std::string(controller_name(cfg.controller))},
      {"dynamics_model", cfg.model == DynamicsModel::ClosedForm ? "closed_form" : "rigid_body"},
      {"dt_s", cfg.dt},
      {"duration_s", cfg.duration},
      {"settling_band", cfg.settling_band},
      {"initial_rad", vec_json(cfg.initial.theta)},
      {"reference_rad", vec_json(cfg.reference.theta)},
      {"samples", result.times.size()},
      {"metrics", metrics_json(result.metrics)},
  };
  if (result.gain) doc["gain"] = gain_json(*result.gain);
  return doc;
}

json gain_json(const LqrGain& gain) {
  json poles = json::array();
  for (const auto& p : gain.closed_loop_poles) poles.push_back(json::array({p.real(), p.imag()}));
  return {
      {"K", matrix_json(gain.K)},
      {"S", matrix_json(gain.S)},
      {"closed_loop_poles", poles},
      {"are_residual", gain.residual},
      {"iterations", gain.iterations},
  };
}

json compare_json(const SimResult& lqr, const SimConfig& lqr_cfg, const SimResult& pid, const SimConfig& pid_cfg) {
  const auto& a = lqr.metrics;
  const auto& b = pid.metrics;
  json settling_delta = json::array();
  for (int j = 0; j < 3; ++j) settling_delta.push_back(finite_or_null(b.settling_time[j] - a.settling_time[j]));
  json lqr_faster = json::array();
  for (int j = 0; j < 3; ++j) lqr_faster.push_back(a.settling_time[j] < b.settling_time[j]);
  return {
      {"lqr", run_json(lqr, lqr_cfg)},
      {"pid", run_json(pid, pid_cfg)},
      {"delta_pid_minus_lqr",
       {
           {"settling_time_s", settling_delta},
           {"overshoot_pct", vec_json(b.overshoot_pct - a.overshoot_pct)},
           {"peak_velocity_rad_s", vec_json(b.peak_velocity - a.peak_velocity)},
           {"cost_J", b.cost_J - a.cost_J},
       }},
      {"lqr_settles_faster", lqr_faster},
  };
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  if (ec) throw Error(ErrorCode::Io, "cannot create directory " + path.parent_path().string() + ": " + ec.message());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot open " + path.string() + " for writing");
  out << text;
  out.flush();
  if (!out) throw Error(ErrorCode::Io, "failed writing " + path.string());
}

std::string dump_json(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace armlqr
