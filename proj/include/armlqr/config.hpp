#pragma once

#include <armlqr/kinematics.hpp>
#include <armlqr/model.hpp>
#include <armlqr/sim.hpp>

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>

namespace armlqr {

inline constexpr int kConfigSchemaVersion = 1;

inline constexpr double kCmPerM = 100.0;

inline double cm_to_m(double cm) { return cm / kCmPerM; }
inline double m_to_cm(double m) { return m * kCmPerM; }
inline Vec3 cm_to_m(const Vec3& cm) { return cm / kCmPerM; }
inline Vec3 m_to_cm(const Vec3& m) { return m * kCmPerM; }

/// Fully resolved experiment: SI units, endpoints already in joint space.
struct ExperimentConfig {
  ManipulatorParams params = default_params();
  SimConfig sim;
  ControllerParams controller;
  std::filesystem::path out_dir = "out";
};

/// Start (10, 10, 10) cm, goal (15, 25, 20) cm, LQR with the default
/// weights, 5 s run.
ExperimentConfig default_experiment();

/// Parses a schema-version-1 document (see schema/experiment.schema.json).
/// Missing sections keep default_experiment() values. Cartesian endpoints go
/// through inverse_kinematics.
///
/// Throws Error{InvalidArgument} for schema violations, the IK errors for
/// unreachable endpoints, and the validate_* errors for bad parameters.
ExperimentConfig parse_experiment(const nlohmann::json& doc);

/// Reads and parses a config file. Throws Error{Io} if it cannot be read.
ExperimentConfig load_experiment(const std::filesystem::path& path);

}  // namespace armlqr
