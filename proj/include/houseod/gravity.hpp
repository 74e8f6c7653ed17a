#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace houseod {

/// Normalized spherical-harmonic gravity field. Coefficients are stored both
/// normalized (as loaded) and denormalized for the recursion used in
/// gravity_accel.
class HarmonicsModel {
  public:
    HarmonicsModel() = default;

    /// Pure two-body field (degree 0 only).
    static HarmonicsModel point_mass(double mu, double radius);

    double mu() const { return mu_; }
    double radius() const { return radius_; }
    int max_degree() const { return max_degree_; }

    double cnm(int n, int m) const { return c_norm_[idx(n, m)]; }
    double snm(int n, int m) const { return s_norm_[idx(n, m)]; }
    double cnm_unnorm(int n, int m) const { return c_[idx(n, m)]; }
    double snm_unnorm(int n, int m) const { return s_[idx(n, m)]; }

  private:
    static std::size_t idx(int n, int m) {
        return static_cast<std::size_t>(n) * (n + 1) / 2 + static_cast<std::size_t>(m);
    }
    double mu_ = 0.0, radius_ = 0.0;
    int max_degree_ = 0;
    std::vector<double> c_norm_, s_norm_;  // normalized, as in the file
    std::vector<double> c_, s_;            // denormalized

    friend HarmonicsModel load_harmonics(const std::string& path);
    friend HarmonicsModel harmonics_from_table(double mu, double radius, int nmax,
                                               const std::vector<double>& c_norm,
                                               const std::vector<double>& s_norm);
};

/// Reads the coefficient file format:
///   header line  "mu <value> radius <value> nmax <N>"
///   data lines   "n m Cnm Snm"   (normalized), '#' starts a comment
/// Lines may appear in any order; every (n, m) with m <= n <= N must be
/// present exactly once. Parse errors carry the line number.
HarmonicsModel load_harmonics(const std::string& path);

/// Builds a model from triangular row-major tables (tests, file writers).
HarmonicsModel harmonics_from_table(double mu, double radius, int nmax,
                                    const std::vector<double>& c_norm,
                                    const std::vector<double>& s_norm);

/// Gravitational acceleration in the Earth-fixed frame at r_ecef, truncated
/// at the given degree and order (both <= model max). Includes the central
/// term. Nonsingular at the poles.
Eigen::Vector3d gravity_accel(const Eigen::Vector3d& r_ecef, const HarmonicsModel& model,
                              int degree, int order);

}  // namespace houseod
