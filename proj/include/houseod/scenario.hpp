#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace houseod {

/// One side of the truth/filter dynamics split.
struct DynamicsSettings {
    int gravity_degree = 0;
    int gravity_order = 0;
    bool sun = false;
    bool moon = false;
    double integ_step = 60.0;  ///< RK substep, seconds
};

/// Declarative description of a complete experiment: truth dynamics, sensors,
/// noise moments, epochs, filter list and Monte-Carlo settings. Parsed from a
/// flat key = value file with dotted section keys.
struct ScenarioConfig {
    std::string kind;  // "projectile" | "synthetic-od"

    double mjd0 = 55200.0;
    double duration = 0.0;  ///< seconds; projectile may stop earlier on impact
    double meas_interval = 30.0;
    double coast_interval = 180.0;  ///< epoch grid outside visibility windows
    double max_step = 180.0;        ///< filter prediction substep bound

    std::string gravity_file;
    DynamicsSettings truth;
    DynamicsSettings filter;
    bool truth_process_noise = false;

    Eigen::VectorXd init_mean;
    Eigen::MatrixXd init_cov;
    Eigen::VectorXd init_skew, init_kurt;

    Eigen::VectorXd process_std, process_skew, process_kurt;
    Eigen::VectorXd meas_std, meas_skew, meas_kurt;
    std::string meas_kind = "azel";  // azel | radar4 | radec
    Eigen::Vector3d station_ecef = Eigen::Vector3d::Zero();
    double min_elevation = 0.0;  ///< radians

    double drag_b = 0.001;
    double gravity_g = 9.807;

    std::vector<std::string> filters;
    double ut_kappa = 0.0;
    double dhouse_delta = 0.0;
    bool dhouse_floor = true;
    double whouse_threshold = -0.1;
    bool whouse_floor = false;

    int trials = 100;
    std::uint64_t seed = 1;
    double divergence_factor = 100.0;
    int threads = 0;  ///< 0 = hardware concurrency
};

ScenarioConfig parse_config_text(const std::string& text, const std::string& origin = "<text>");
ScenarioConfig load_config(const std::string& path);

/// Serializes every resolved setting; reloading the result reproduces the
/// run byte for byte.
std::string manifest_text(const ScenarioConfig& cfg);

/// Raw key/value access used by the CLI to apply overrides before parsing.
std::map<std::string, std::string> read_key_values(const std::string& path);
ScenarioConfig config_from_key_values(const std::map<std::string, std::string>& kv,
                                      const std::string& origin);

}  // namespace houseod
