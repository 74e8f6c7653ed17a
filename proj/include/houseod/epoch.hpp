#pragma once

#include <Eigen/Dense>

namespace houseod {

/// Absolute time as a modified Julian date. Scenario code keeps time as
/// seconds past a base Epoch; this class carries the base and converts for
/// the Earth-rotation angle. No UT1/TT distinction, no Earth-orientation
/// corrections.
class Epoch {
  public:
    Epoch() = default;
    static Epoch from_mjd(double mjd) { return Epoch(mjd); }
    static Epoch from_calendar(int year, int month, int day, int hour = 0, int minute = 0,
                               double second = 0.0);

    double mjd() const { return mjd_; }
    Epoch advanced(double seconds) const { return Epoch(mjd_ + seconds / 86400.0); }
    double seconds_since(const Epoch& ref) const { return (mjd_ - ref.mjd_) * 86400.0; }

  private:
    explicit Epoch(double mjd) : mjd_(mjd) {}
    double mjd_ = 51544.5;  // J2000.0
};

/// Greenwich mean sidereal time, radians in [0, 2 pi).
double gmst_angle(const Epoch& epoch);

/// Rotation taking ECI coordinates to ECEF (z-rotation by GMST).
Eigen::Matrix3d gmst_rotation(const Epoch& epoch);

}  // namespace houseod
