#pragma once

#include <functional>

#include "conekit/cone.hpp"

namespace conekit {

// Compactly supported radial test function with its derivative; value and
// deriv are expected to vanish outside [support_lo, support_hi] and value
// must vanish at both ends of the support.
struct RadialTestFunction {
    double support_lo = 0.0;
    double support_hi = 1.0;
    std::function<double(double)> value;
    std::function<double(double)> deriv;
};

struct HardyCheck {
    double lhs = 0.0;    // integral of r^{-p-2} f^2 r^{n-1} dr
    double rhs = 0.0;    // integral of r^{-p} (f')^2 r^{n-1} dr
    double ratio = 0.0;  // lhs/rhs, 0 when rhs == 0
    double bound = 0.0;  // (2/(n-2-p))^2
};

// Weighted Hardy inequality on the radial half-line: lhs <= bound * rhs.
// Requires p_exp < n-2; throws std::invalid_argument otherwise.
HardyCheck hardy_check(int n, double p_exp, const RadialTestFunction& f);

// Tests the stability inequality of the cone against one radial test
// function: true iff
//   lambda * int r^{n-3} zeta^2 <= int (zeta'^2 - (n-1) r^{-2} zeta^2) r^{n-1}
// within quadrature tolerance.  The |Sigma| factor cancels from both sides.
bool cone_stability_inequality(const ConeSpec& cone, const RadialTestFunction& zeta,
                               double lambda_cand);

}  // namespace conekit
