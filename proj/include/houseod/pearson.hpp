#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <vector>

#include "houseod/moments.hpp"

namespace houseod {

/// Uniform double in (0, 1), fully determined by the generator state.
inline double uniform01(std::mt19937_64& rng) {
    return (static_cast<double>(rng() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
}

/// Inverse of the standard normal CDF (Wichura's PPND16, ~1e-16 accuracy).
double inverse_normal_cdf(double p);

/// Sampler for a standardized (mean 0, variance 1) Pearson-family variate
/// with prescribed skewness and kurtosis.
///
/// The family member is selected implicitly through the Pearson differential
/// equation; sampling is by inverse CDF over a tabulated grid, except for the
/// exact Gaussian case which uses the closed-form inverse normal CDF.
/// Construction is deterministic, draws are deterministic given the generator
/// state, so identical seeds reproduce identical samples bitwise.
class PearsonSampler {
  public:
    static PearsonSampler standardized(double skew, double kurt);

    double draw(std::mt19937_64& rng) const { return invert(uniform01(rng)); }

    bool gaussian_branch() const { return gaussian_; }

    /// Inverse CDF of the standardized variate (exposed for tests).
    double invert(double u) const;

  private:
    PearsonSampler() = default;

    bool gaussian_ = false;
    // tabulated inverse CDF for the non-Gaussian branches
    std::vector<double> x_;
    std::vector<double> cdf_;
    double grid_mean_ = 0.0;
    double grid_sd_ = 1.0;
};

/// Draws `count` samples of an n-dimensional vector with independent
/// standardized Pearson marginals shaped by spec.skew/spec.kurt, then applies
/// the affine transform mean + S z with S the covariance factor.
/// Returns an n x count matrix. Deterministic given `seed`.
Eigen::MatrixXd pearson_sample(const MomentSpec& spec, Eigen::Index count, std::uint64_t seed);

}  // namespace houseod
