#include "conekit/hardy.hpp"

#include <cmath>
#include <stdexcept>

#include "conekit/quadrature.hpp"

namespace conekit {

HardyCheck hardy_check(int n, double p_exp, const RadialTestFunction& f) {
    if (!(p_exp < n - 2))
        throw std::invalid_argument("hardy_check: requires p < n-2");
    if (!f.value || !f.deriv)
        throw std::invalid_argument("hardy_check: test function needs value and derivative");

    HardyCheck result;
    const double lo = f.support_lo, hi = f.support_hi;
    result.lhs = integrate_radial(lo, hi, [&](double r) {
        double v = f.value(r);
        return std::pow(r, n - 3.0 - p_exp) * v * v;
    });
    result.rhs = integrate_radial(lo, hi, [&](double r) {
        double d = f.deriv(r);
        return std::pow(r, n - 1.0 - p_exp) * d * d;
    });
    result.bound = 4.0 / ((n - 2.0 - p_exp) * (n - 2.0 - p_exp));
    result.ratio = result.rhs == 0.0 ? 0.0 : result.lhs / result.rhs;
    return result;
}

bool cone_stability_inequality(const ConeSpec& cone, const RadialTestFunction& zeta,
                               double lambda_cand) {
    if (!zeta.value || !zeta.deriv)
        throw std::invalid_argument("cone_stability_inequality: test function needs value and derivative");
    const int n = cone.n;
    const double lo = zeta.support_lo, hi = zeta.support_hi;
    const double hardy_side = integrate_radial(lo, hi, [&](double r) {
        double v = zeta.value(r);
        return std::pow(r, n - 3.0) * v * v;
    });
    const double gradient_side = integrate_radial(lo, hi, [&](double r) {
        double d = zeta.deriv(r);
        return std::pow(r, n - 1.0) * d * d;
    });
    // second variation minus the Hardy-weighted candidate
    const double lhs = lambda_cand * hardy_side;
    const double rhs = gradient_side - (n - 1.0) * hardy_side;
    const double tol = 1e-10 * (std::abs(lhs) + std::abs(rhs) + 1.0);
    return lhs <= rhs + tol;
}

}  // namespace conekit
