#pragma once

#include <Eigen/Dense>
#include <optional>

#include "houseod/tri_factor.hpp"

namespace houseod {

/// Four-moment summary of a PDF: mean, covariance, and per-marginal
/// standardized skewness / kurtosis. Gaussian is skew = 0, kurt = 3.
struct MomentSpec {
    Eigen::VectorXd mean;
    Eigen::MatrixXd cov;
    Eigen::VectorXd skew;
    Eigen::VectorXd kurt;
    std::optional<TriFactor> sqrt;  ///< set when the covariance is carried in factor form

    Eigen::Index dim() const { return mean.size(); }

    /// Factor of the covariance: the carried TriFactor when present,
    /// a fresh Cholesky factorization otherwise.
    TriFactor factor() const {
        return sqrt ? *sqrt : TriFactor::from_covariance(cov);
    }

    static MomentSpec gaussian(Eigen::VectorXd mean, Eigen::MatrixXd cov);

    /// Independent marginals from per-component standard deviations and
    /// (broadcastable) skew/kurt vectors.
    static MomentSpec diagonal(Eigen::VectorXd mean, const Eigen::VectorXd& stddev,
                               const Eigen::VectorXd& skew, const Eigen::VectorXd& kurt);
};

/// Feasibility margin below which (skew, kurt) pairs are rejected:
/// kurt >= skew^2 + 1 + margin.
inline constexpr double kMomentFeasibilityMargin = 1e-9;

/// Throws MomentFeasibilityError when any marginal violates the bound.
void check_feasible(const Eigen::VectorXd& skew, const Eigen::VectorXd& kurt);
void check_feasible(const MomentSpec& spec);

/// Weighted covariance of a point set about a given mean. Returns the
/// covariance together with the deviation columns for reuse.
/// Weights must sum to 1 within 1e-12.
struct CentralMoments {
    Eigen::MatrixXd cov;
    Eigen::MatrixXd deviations;
};
CentralMoments weighted_central_moments(const Eigen::MatrixXd& points,
                                        const Eigen::VectorXd& weights,
                                        const Eigen::VectorXd& mean);

/// Per-marginal skewness and kurtosis of the normalised deviations
/// x~_j = S^{-1} d_j, weighted elementwise third and fourth powers.
struct StandardizedMoments {
    Eigen::VectorXd skew;
    Eigen::VectorXd kurt;
};
StandardizedMoments standardized_moments(const Eigen::MatrixXd& deviations,
                                         const Eigen::VectorXd& weights,
                                         const TriFactor& s);

}  // namespace houseod
