#pragma once

#include <string>

#include "conekit/beta_poly.hpp"

namespace conekit {

// Structured-text form of a beta-harmonic polynomial:
//   {"beta": "...", "ell": L, "q": Q,
//    "layers": [{"degree": D, "terms": [{"multi_index": [...],
//                "numerator": "...", "denominator": "..."}]}]}
// Rationals are serialized as exact integer strings, so the round trip is
// bit-exact.  Symbolic-beta polynomials are not serializable.
std::string beta_polynomial_to_json(const BetaPolynomial& h);

// Rebuilds the polynomial from its leading layer and verifies every stored
// layer against the recursion; throws std::invalid_argument on malformed or
// inconsistent input.
BetaPolynomial beta_polynomial_from_json(const std::string& text);

}  // namespace conekit
