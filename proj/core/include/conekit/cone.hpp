#pragma once

#include "conekit/rational.hpp"

namespace conekit {

// The minimal cone over S^p(a) x S^q(b) inside R^{n+1}, n = p+q+1, with
// a^2 = p/(p+q), b^2 = q/(p+q).  The cross-section Sigma = cone cap S^n is
// a minimal submanifold of S^n with |A_Sigma|^2 = n-1.
struct ConeSpec {
    int p = 0;
    int q = 0;
    int n = 0;
    Rational a_sq;
    Rational b_sq;
    Rational second_ff_sq;
};

// Throws std::invalid_argument unless p,q >= 1 (p=0 or q=0 is not a smooth
// cross-section).
ConeSpec build_cone(int p, int q);

enum class StabilityClass { strictly_stable, borderline, unstable };

struct StabilityReport {
    StabilityClass classification;
    // lambda_1 + ((n-2)/2)^2, exact; positive iff strictly stable
    Rational margin;
};

StabilityReport strict_stability(const ConeSpec& cone);

// Area |Sigma| of the cross-section.  The eigenfunctions phi_j are kept
// abstract and unit-normalized; the measure normalization enters results
// only through this factor.
double cross_section_area(const ConeSpec& cone);

}  // namespace conekit
