#pragma once

#include <armlqr/config.hpp>
#include <armlqr/lqr.hpp>
#include <armlqr/sim.hpp>

#include <nlohmann/json.hpp>

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

namespace armlqr {

inline constexpr std::string_view kTrajectoryHeader = "t,theta1,theta2,theta3,omega1,omega2,omega3,tau1,tau2,tau3";

/// Fixed-point rendering with 9 significant digits (never exponent form).
/// Magnitudes below 1e-12 print as zero; "-0" is normalized to "0".
std::string format_fixed9(double v);

/// Fixed-point with `decimals` places, "-0.0000" normalized to "0.0000".
std::string format_decimals(double v, int decimals);

/// One header line plus one row per sample, LF line endings.
void write_trajectory_csv(std::ostream& out, const SimResult& result);

nlohmann::json metrics_json(const ResponseMetrics& m);

/// Metrics plus run description (controller, dt, endpoints).
nlohmann::json run_json(const SimResult& result, const SimConfig& cfg);

nlohmann::json gain_json(const LqrGain& gain);

/// Both runs plus per-joint deltas (pid - lqr).
nlohmann::json compare_json(const SimResult& lqr, const SimConfig& lqr_cfg, const SimResult& pid,
                            const SimConfig& pid_cfg);

/// Writes text to a file, creating parent directories. Throws Error{Io}.
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// JSON document text: 2-space indent, trailing LF.
std::string dump_json(const nlohmann::json& doc);

}  // namespace armlqr
