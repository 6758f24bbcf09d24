#pragma once

#include <functional>
#include <string>
#include <vector>

namespace conekit {

// Cell-centered polar grid on the weighted half-ball.  For ell = 1 the grid
// covers (rho, theta) in (0,1) x (-pi/2, pi/2) with r = rho cos(theta),
// y = rho sin(theta).  For ell >= 2 only y-radially symmetric data is
// represented: theta in (0, pi/2) and the second coordinate is s = |y|.
// Cell centers never touch the degenerate lines rho = 0, cos(theta) = 0
// (nor sin(theta) = 0 when ell >= 2).
struct HalfBallGrid {
    int ell = 1;
    double beta = 1.0;
    int n_rho = 0;
    int n_theta = 0;
    double rho_max = 1.0;
    double theta_lo = 0.0;
    double theta_hi = 0.0;

    static HalfBallGrid make(int ell, double beta, int n_rho, int n_theta, double rho_max = 1.0);

    double drho() const { return rho_max / n_rho; }
    double dtheta() const { return (theta_hi - theta_lo) / n_theta; }
    double rho_center(int i) const { return (i + 0.5) * drho(); }
    double theta_center(int j) const { return theta_lo + (j + 0.5) * dtheta(); }
    size_t index(int i, int j) const { return static_cast<size_t>(i) * n_theta + j; }

    // rho-power of the energy weight: rho^{ell+1+beta}
    double radial_exponent() const { return ell + 1 + beta; }
    // angular factor cos^{1+beta} theta sin^{ell-1} theta
    double angular_weight(double theta) const;
};

struct HalfBallField {
    HalfBallGrid grid;
    std::vector<double> values;  // values[grid.index(i,j)]
    // set for synthesized fields; sampling then bypasses interpolation
    std::function<double(double, double)> analytic;

    // cubic (4-point Lagrange) interpolation on the polar grid
    double value_polar(double rho, double theta) const;
    // (r, z) with z the signed y-coordinate (ell = 1) or |y| (ell >= 2)
    double value_rz(double r, double z) const;
};

// Delimited text export with full decimal precision; reload is bit-exact.
std::string field_to_text(const HalfBallField& field);
HalfBallField field_from_text(const std::string& text);

}  // namespace conekit
