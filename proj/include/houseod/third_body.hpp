#pragma once

#include <Eigen/Dense>

#include "houseod/epoch.hpp"

namespace houseod {

namespace consts {
inline constexpr double kMuEarth = 3.986004415e14;  // m^3/s^2
inline constexpr double kMuSun = 1.32712440018e20;
inline constexpr double kMuMoon = 4.9028e12;
inline constexpr double kEarthRadius = 6378136.3;      // m
inline constexpr double kEarthPolarRadius = 6356752.3;  // m
inline constexpr double kAu = 1.495978707e11;           // m
}  // namespace consts

/// Low-precision analytic geocentric Sun position, ECI of date, meters.
Eigen::Vector3d sun_position_eci(const Epoch& epoch);

/// Low-precision analytic geocentric Moon position, ECI of date, meters.
Eigen::Vector3d moon_position_eci(const Epoch& epoch);

struct SunMoon {
    Eigen::Vector3d sun;
    Eigen::Vector3d moon;
};
SunMoon sun_moon_pos(const Epoch& epoch);

/// Tidal (differential) third-body acceleration on a satellite at r_sat from
/// a body at r_body: mu_b (d/|d|^3 - r_body/|r_body|^3), d = r_body - r_sat.
Eigen::Vector3d third_body_accel(const Eigen::Vector3d& r_sat, const Eigen::Vector3d& r_body,
                                 double mu_body);

}  // namespace houseod
