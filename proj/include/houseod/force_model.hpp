#pragma once

#include <Eigen/Dense>

#include "houseod/epoch.hpp"
#include "houseod/gravity.hpp"
#include "houseod/orbit_elements.hpp"

namespace houseod {

/// Perturbation stack for orbit propagation: spherical-harmonic gravity at a
/// chosen truncation plus optional Sun/Moon attraction. Time is seconds past
/// `base`. The model is read-only and shareable across threads.
struct ForceModel {
    const HarmonicsModel* gravity = nullptr;
    int degree = 0;
    int order = 0;
    bool sun = false;
    bool moon = false;
    Epoch base;

    double mu() const { return gravity->mu(); }

    /// Total inertial acceleration (central body included) at an ECI position.
    Eigen::Vector3d accel_eci(const Eigen::Vector3d& r_eci, double t) const;

    /// Acceleration minus the two-body term, for element-rate formulations.
    Eigen::Vector3d perturb_accel_eci(const Eigen::Vector3d& r_eci, double t) const;
};

/// Cartesian two-body + perturbations propagation of rv = (r, v) over
/// [t0, t1] with RK4 substeps of at most max_step.
Vec6 propagate_cartesian(const ForceModel& fm, const Vec6& rv, double t0, double t1,
                         double max_step);

/// Same trajectory propagated in modified equinoctial elements.
Mee propagate_mee(const ForceModel& fm, const Mee& mee, double t0, double t1, double max_step);

}  // namespace houseod
