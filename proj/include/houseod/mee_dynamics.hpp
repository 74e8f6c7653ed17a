#pragma once

#include <Eigen/Dense>

#include "houseod/orbit_elements.hpp"

namespace houseod {

/// Projections of an ECI acceleration onto the radial / tangential / normal
/// triad of the orbit at (r, v).
Eigen::Vector3d rtn_from_eci(const Eigen::Vector3d& r, const Eigen::Vector3d& v,
                             const Eigen::Vector3d& a_eci);

/// Modified-equinoctial-element rates under a perturbing acceleration given
/// in the RTN frame (radial, tangential, normal), m/s^2.
Vec6 mee_rates(const Mee& mee, const Eigen::Vector3d& a_rtn, double mu);

}  // namespace houseod
