#pragma once

#include <Eigen/Dense>

#include "houseod/moments.hpp"
#include "houseod/tri_factor.hpp"

namespace houseod {

/// Weighted deterministic point set encoding a distribution's moments.
struct SigmaPointSet {
    Eigen::MatrixXd points;   ///< n x N
    Eigen::VectorXd weights;  ///< N, sums to 1
    Eigen::Index central_index = -1;  ///< index of the mean-located point, -1 if none
    bool house_reset = false;         ///< w-mode reset fired during generation

    Eigen::Index dim() const { return points.rows(); }
    Eigen::Index count() const { return points.cols(); }
};

/// HOUSE generator parameters.
///
/// delta mode: components whose kurtosis falls below n/(1-delta) + skew^2 are
/// lifted to that floor before the alpha/beta coefficients are formed, which
/// pins the central weight at >= delta.
///
/// w mode: no floor by default; when the central weight falls below
/// w_threshold it is reset to zero and the remaining 2n weights are rescaled
/// to sum to one. The kurtosis floor can still be enabled as a knob.
struct HouseParams {
    enum class Mode { Delta, W };
    Mode mode = Mode::Delta;
    double delta = 0.0;
    double w_threshold = -0.1;
    bool kurtosis_floor = true;

    static HouseParams delta_mode(double delta, bool floor = true) {
        HouseParams p;
        p.mode = Mode::Delta;
        p.delta = delta;
        p.kurtosis_floor = floor;
        return p;
    }
    static HouseParams w_mode(double threshold, bool floor = false) {
        HouseParams p;
        p.mode = Mode::W;
        p.delta = 0.0;
        p.w_threshold = threshold;
        p.kurtosis_floor = floor;
        return p;
    }
};

/// Unscented transformation points: mean +- sqrt(n + kappa) S e_j with
/// weights 1/(2(n+kappa)) and central weight kappa/(n+kappa).
SigmaPointSet ut_points(const Eigen::VectorXd& mean, const TriFactor& s, double kappa_tuning);

/// HOUSE points matching the per-marginal four-moment summary of `spec`.
SigmaPointSet house_points(const MomentSpec& spec, const HouseParams& params);

/// Conjugate-axes points matching standard Gaussian moments through the given
/// order (4 or 6), affinely mapped to (mean, S S^T). Scalings and weights are
/// solved from the moment-constraint equations once per (dimension, order)
/// and cached.
SigmaPointSet cut_points(const Eigen::VectorXd& mean, const TriFactor& s, int order);

}  // namespace houseod
