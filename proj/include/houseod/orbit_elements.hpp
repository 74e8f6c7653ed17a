#pragma once

#include <Eigen/Dense>

namespace houseod {

using Vec6 = Eigen::Matrix<double, 6, 1>;

/// Classical orbital elements (a, e, i, argp, raan, nu); meters and radians.
struct Coe {
    double a = 0.0;
    double e = 0.0;
    double inc = 0.0;
    double argp = 0.0;
    double raan = 0.0;
    double nu = 0.0;
};

/// Modified equinoctial elements (p, f, g, h, k, L); p in meters, L radians.
/// Nonsingular except at 180 degrees inclination.
struct Mee {
    double p = 0.0;
    double f = 0.0;
    double g = 0.0;
    double h = 0.0;
    double k = 0.0;
    double L = 0.0;

    Vec6 vector() const {
        Vec6 v;
        v << p, f, g, h, k, L;
        return v;
    }
    static Mee from_vector(const Vec6& v) { return {v(0), v(1), v(2), v(3), v(4), v(5)}; }
};

/// Cartesian ECI (r, v) -> classical elements. Throws on rectilinear orbits.
Coe cart_to_coe(const Eigen::Vector3d& r, const Eigen::Vector3d& v, double mu);

/// Classical elements -> Cartesian ECI state (r, v stacked).
Vec6 coe_to_cart(const Coe& coe, double mu);

/// The six defining relations p = a(1-e^2), f = e cos(argp+raan), ...
Mee coe_to_mee(const Coe& coe);
Coe mee_to_coe(const Mee& mee);

/// Composites through COE.
Vec6 mee_to_cart(const Mee& mee, double mu);
Mee cart_to_mee(const Eigen::Vector3d& r, const Eigen::Vector3d& v, double mu);

/// Wrap into [0, 2 pi).
double wrap_two_pi(double angle);

}  // namespace houseod
