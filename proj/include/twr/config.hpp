#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace twr {

// All experiment parameters for one scenario. Powers are stored in dB
// relative to the noise floor sigma^2 = 1 unless sigma2 says otherwise.
struct ScenarioConfig {
  int num_sources_total = 0;            // K_T, even
  int antennas = 0;                     // M
  Eigen::VectorXd source_powers_db;     // size K_T
  double relay_power_db = 0.0;
  double noise_power = 1.0;             // sigma^2, linear
  double rho = 0.0;                     // pairwise channel correlation knob
  std::uint64_t seed = 0;
  int trials = 0;
  std::optional<Eigen::VectorXd> sinr_targets_db;  // per pair, size K_T/2
  std::optional<Eigen::VectorXd> beta;             // per pair, size K_T/2
  std::optional<std::vector<int>> subgroups;       // candidate N values
};

// Plain-text "key = value" format with '#' comments; lists comma-separated.
// Required keys: K_T, M, p_source_db, p_relay_db, rho, seed, trials.
// Optional: sigma2, sinr_targets_db, beta, subgroups.
// Throws config_error naming the offending key.
ScenarioConfig parse_scenario_text(const std::string& text);
ScenarioConfig parse_scenario_file(const std::string& path);

Eigen::VectorXd source_powers_linear(const ScenarioConfig& cfg);
double relay_power_linear(const ScenarioConfig& cfg);

// Per-source response gains: config beta broadcast from pairs, or ones.
Eigen::VectorXd response_gains(const ScenarioConfig& cfg);

}  // namespace twr
