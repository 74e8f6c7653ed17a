#pragma once

#include <Eigen/Dense>
#include <vector>

#include "houseod/epoch.hpp"

namespace houseod {

/// Earth rotation rate matching the GMST expression, rad/s.
inline constexpr double kEarthRotationRate = 7.2921158553e-5;

struct GroundStation {
    Eigen::Vector3d ecef_pos = Eigen::Vector3d::Zero();
    Eigen::Vector3d ecef_vel = Eigen::Vector3d::Zero();  // zero for fixed stations

    Eigen::Vector3d eci_pos(const Epoch& epoch) const;
    Eigen::Vector3d eci_vel(const Epoch& epoch) const;
};

enum class MeasKind { AzEl, RaDec, Radar4 };

struct Measurement {
    double epoch = 0.0;
    MeasKind kind = MeasKind::AzEl;
    Eigen::VectorXd values;
    std::vector<bool> angular;
};

std::vector<bool> angular_mask(MeasKind kind);

/// Projectile equations of motion: position rates are the velocities,
/// velocity rates are -b |v| v + f + (0, 0, -g).
Eigen::VectorXd projectile_rates(const Eigen::VectorXd& x, const Eigen::Vector3d& f_xyz, double b,
                                 double g);

/// Azimuth/elevation of a projectile state about the frame origin:
/// az = atan2(y, -x) + noise, el = atan2(z, sqrt(x^2 + y^2)) + noise.
Measurement azel_measure(const Eigen::VectorXd& x, const Eigen::Vector2d& noise);

/// Topocentric right ascension / declination of an ECI position seen from a
/// ground station (rotated to ECI by GMST). RA in [0, 2 pi), Dec in
/// [-pi/2, pi/2].
Measurement radec_measure(const Eigen::Vector3d& r_eci, const GroundStation& stn,
                          const Epoch& epoch, const Eigen::Vector2d& noise);

/// Radar observables (range, range rate, RA, Dec), station-relative
/// throughout.
Measurement radar_measure(const Eigen::Vector3d& r_eci, const Eigen::Vector3d& v_eci,
                          const GroundStation& stn, const Epoch& epoch,
                          const Eigen::Vector4d& noise);

/// Topocentric elevation above the station's local horizon, radians.
double topocentric_elevation(const Eigen::Vector3d& r_eci, const GroundStation& stn,
                             const Epoch& epoch);

/// True when the object sits at or above the configured minimum elevation.
bool visible(const Eigen::Vector3d& r_eci, const GroundStation& stn, const Epoch& epoch,
             double min_elevation = 0.0);

}  // namespace houseod
