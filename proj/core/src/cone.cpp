#include "conekit/cone.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace conekit {

ConeSpec build_cone(int p, int q) {
    if (p < 1 || q < 1)
        throw std::invalid_argument("build_cone: need p >= 1 and q >= 1");
    ConeSpec cone;
    cone.p = p;
    cone.q = q;
    cone.n = p + q + 1;
    cone.a_sq = Rational(p, p + q);
    cone.b_sq = Rational(q, p + q);
    cone.second_ff_sq = cone.n - 1;
    return cone;
}

StabilityReport strict_stability(const ConeSpec& cone) {
    // lambda_1 = -(n-1) (constant eigenfunction), so the margin
    // lambda_1 + ((n-2)/2)^2 is exact rational data.
    const Rational lambda1 = -(Rational(cone.n) - 1);
    const Rational margin = lambda1 + rational_pow(Rational(cone.n - 2, 2), 2);
    StabilityReport report;
    report.margin = margin;
    if (margin > 0) report.classification = StabilityClass::strictly_stable;
    else if (margin == 0) report.classification = StabilityClass::borderline;
    else report.classification = StabilityClass::unstable;
    return report;
}

namespace {

// |S^d|, d-dimensional unit sphere
double unit_sphere_area(int d) {
    return 2.0 * std::pow(std::numbers::pi, 0.5 * (d + 1)) / std::tgamma(0.5 * (d + 1));
}

}  // namespace

double cross_section_area(const ConeSpec& cone) {
    const double a = std::sqrt(to_double(cone.a_sq));
    const double b = std::sqrt(to_double(cone.b_sq));
    return std::pow(a, cone.p) * unit_sphere_area(cone.p) *
           std::pow(b, cone.q) * unit_sphere_area(cone.q);
}

}  // namespace conekit
