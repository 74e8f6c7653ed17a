#pragma once

#include <Eigen/Dense>
#include <functional>

namespace houseod {

using RatesFn = std::function<Eigen::VectorXd(double t, const Eigen::VectorXd& x)>;

/// Classical fourth-order Runge-Kutta with fixed substeps of at most
/// `max_step`. Throws IntegrationError (with the offending time) when the
/// rates turn non-finite.
Eigen::VectorXd integrate_rk(const RatesFn& rates, Eigen::VectorXd x0, double t0, double t1,
                             double max_step);

}  // namespace houseod
