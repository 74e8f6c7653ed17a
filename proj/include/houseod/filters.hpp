#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "houseod/moments.hpp"
#include "houseod/sigma_points.hpp"

namespace houseod {

enum class CovarianceForm { Full, SquareRoot };

/// Timestamped four-moment state estimate. The covariance lives either as a
/// full matrix or as a triangular factor, selected by `form`.
struct FilterEstimate {
    double epoch = 0.0;
    Eigen::VectorXd mean;
    Eigen::MatrixXd cov;            ///< authoritative in Full form
    std::optional<TriFactor> sqrt;  ///< authoritative in SquareRoot form
    Eigen::VectorXd skew;
    Eigen::VectorXd kurt;
    CovarianceForm form = CovarianceForm::Full;

    Eigen::Index dim() const { return mean.size(); }
    Eigen::MatrixXd covariance() const {
        return form == CovarianceForm::SquareRoot ? sqrt->covariance() : cov;
    }
    TriFactor factor() const {
        return form == CovarianceForm::SquareRoot ? *sqrt : TriFactor::from_covariance(cov);
    }

    static FilterEstimate from_spec(double epoch, const MomentSpec& spec, CovarianceForm form);
};

/// One of the six estimator variants with its generator parameters.
struct FilterKind {
    enum class Type { Ukf, SrUkf, Cut4, Cut6, DeltaHouse, WHouse };
    Type type = Type::Ukf;
    double ut_kappa = 0.0;
    HouseParams house;

    static FilterKind ukf(double kappa = 0.0);
    static FilterKind srukf(double kappa = 0.0);
    static FilterKind cut4();
    static FilterKind cut6();
    static FilterKind delta_house(double delta, bool floor = true);
    static FilterKind w_house(double threshold, bool floor = false);

    bool is_house() const { return type == Type::DeltaHouse || type == Type::WHouse; }
    bool square_root() const { return type == Type::SrUkf || type == Type::WHouse; }
    std::string name() const;
};

/// Discrete-time dynamics x(k) = F(x(k-1), w(k-1)) over [t0, t1].
struct StateModel {
    std::function<Eigen::VectorXd(const Eigen::VectorXd& x, const Eigen::VectorXd& w, double t0,
                                  double t1)>
        propagate;
    Eigen::Index state_dim = 0;
    Eigen::Index noise_dim = 0;
};

/// Measurement z = h(x, v) at a given epoch, with a mask marking angular
/// components (wrapped to principal ranges).
struct MeasModel {
    std::function<Eigen::VectorXd(const Eigen::VectorXd& x, const Eigen::VectorXd& v, double t)>
        measure;
    Eigen::Index meas_dim = 0;
    Eigen::Index noise_dim = 0;
    std::vector<bool> angular;
};

struct FilterOptions {
    double jitter_scale = 1e-12;  ///< diagonal jitter for the one retry, times trace/n
};

struct FilterDiagnostics {
    int jitter_retries = 0;
    int house_resets = 0;
};

/// Time update: augments [x; w], generates sigma points per kind, pushes them
/// through the dynamics and rebuilds the four-moment summary (HOUSE kinds) or
/// mean/covariance with Gaussian higher moments (UKF/SRUKF/CUT kinds).
FilterEstimate predict(const FilterEstimate& est, const FilterKind& kind, const StateModel& dyn,
                       const MomentSpec& process_noise, double t1, const FilterOptions& opts = {},
                       FilterDiagnostics* diag = nullptr);

struct UpdateResult {
    FilterEstimate estimate;
    Eigen::VectorXd innovation;
};

/// Measurement update: augments [x; v], forms predicted measurements, gain and
/// the posterior summary. Angular innovation components are wrapped to
/// (-pi, pi]. On an indefinite covariance the update retries once with
/// diagonal jitter added to the prior, then fails.
UpdateResult update(const FilterEstimate& est, const FilterKind& kind,
                    const Eigen::VectorXd& meas, const MeasModel& mm,
                    const MomentSpec& meas_noise, const FilterOptions& opts = {},
                    FilterDiagnostics* diag = nullptr);

struct TimelineEntry {
    double epoch = 0.0;
    std::optional<Eigen::VectorXd> measurement;
};

/// Alternates predict/update along a strictly increasing timeline. Prediction
/// intervals longer than max_step are split into equal substeps, with process
/// noise applied per substep. Errors are annotated with the failing epoch.
std::vector<FilterEstimate> run_filter(const FilterKind& kind, const FilterEstimate& init,
                                       const StateModel& dyn, const MeasModel& mm,
                                       const MomentSpec& process_noise,
                                       const MomentSpec& meas_noise,
                                       const std::vector<TimelineEntry>& timeline, double max_step,
                                       const FilterOptions& opts = {},
                                       FilterDiagnostics* diag = nullptr);

/// Wrap into (-pi, pi].
double wrap_pi(double angle);

}  // namespace houseod
