#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "houseod/filters.hpp"
#include "houseod/scenario.hpp"

namespace houseod {

/// Truth trajectory sampled at the experiment epochs (seconds past the
/// scenario start), with visibility-derived track labels. track(i) is -1 for
/// prediction-only epochs.
struct TruthData {
    std::vector<double> epochs;
    Eigen::MatrixXd states;  ///< n x K
    std::vector<int> track;
    int num_tracks = 0;
};

/// One synthesized measurement realization over the truth.
struct Synthesis {
    TruthData truth;
    std::vector<TimelineEntry> timeline;  ///< entries align with truth.epochs
};

/// Truth propagation plus noise-corrupted measurements for one seed.
/// Deterministic; identical seeds produce identical output bitwise.
Synthesis synthesize(const ScenarioConfig& cfg, std::uint64_t seed);

/// Per-epoch outcome of one filter on one trial.
struct FilterRun {
    std::string filter;
    bool failed = false;
    std::string failure;
    Eigen::MatrixXd errors;                        ///< n x K, estimate - truth
    std::vector<Eigen::VectorXd> post_residuals;   ///< one per measurement epoch
    std::vector<std::size_t> residual_epoch_index;
    std::vector<bool> diverged_at;
    bool diverged = false;
    double runtime_s = 0.0;
    FilterDiagnostics diagnostics;
};

struct TrialResult {
    int trial = 0;
    Synthesis synthesis;
    std::vector<FilterRun> runs;
};

struct McResult {
    ScenarioConfig cfg;
    std::vector<std::string> filters;
    std::vector<TrialResult> trials;
};

/// Runs every configured filter over `cfg.trials` independent realizations
/// (derived seeds = base seed + trial index); within a trial every filter
/// consumes the identical measurement sequence. Individual filter failures
/// are recorded without aborting the batch.
McResult run_monte_carlo(const ScenarioConfig& cfg);

/// Pooled per-track and overall RMSE plus post-residual RMS for one filter.
struct TrackStats {
    std::string filter;
    struct Row {
        int track = -1;  ///< -1 = all epochs
        long samples = 0;
        Eigen::VectorXd rmse;  ///< per state component
        double pos3d = 0.0;
        double vel3d = 0.0;
    };
    std::vector<Row> rows;
    struct ResidualRow {
        int track = -1;
        Eigen::VectorXd rms;  ///< per measurement component
    };
    std::vector<ResidualRow> residuals;
    int failed_trials = 0;
    int diverged_trials = 0;
};

std::vector<TrackStats> compute_stats(const McResult& result);

/// One full Monte-Carlo run per parameter value, with convergence flags.
struct SweepPoint {
    double value = 0.0;
    bool failed = false;
    bool converged = false;
    int house_resets = 0;
    TrackStats stats;
};
std::vector<SweepPoint> sweep_parameter(const ScenarioConfig& cfg, const std::string& filter_name,
                                        const std::string& param_name,
                                        const std::vector<double>& values);

/// Writes manifest, per-epoch error and residual CSVs, track RMSE, residual
/// RMS, runtimes and failures under out_dir.
void emit(const McResult& result, const std::vector<TrackStats>& stats,
          const std::string& out_dir);

/// Recomputes TrackStats (RMSE and residual RMS rows) from the emitted
/// per-epoch CSV files.
std::vector<TrackStats> stats_from_dir(const std::string& dir);

void emit_sweep(const std::vector<SweepPoint>& sweep, const ScenarioConfig& cfg,
                const std::string& param_name, const std::string& out_dir);

/// Maps a config filter name ("ukf", "srukf", "cut4", "cut6", "dhouse",
/// "whouse") to a FilterKind with the configured parameters.
FilterKind filter_kind_from_config(const ScenarioConfig& cfg, const std::string& name);

}  // namespace houseod
