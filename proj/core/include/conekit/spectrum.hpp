#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "conekit/cone.hpp"
#include "conekit/rational.hpp"

namespace conekit {

// One eigen-level of -L_Sigma = -Delta_Sigma - |A_Sigma|^2 on the
// cross-section, together with the derived radial data: the characteristic
// exponents gamma^{+-} (roots of gamma^2 + (n-2) gamma - lambda = 0) and
// beta = 2 sqrt(((n-2)/2)^2 + lambda) = gamma^+ - gamma^-.
//
// Exact rational values are carried alongside the doubles whenever the
// discriminant is a perfect rational square (it is for the low Simons-cone
// levels).  For unstable levels the discriminant is negative and the
// exponents are complex; the real fields are then NaN and the exact fields
// empty.
struct SpectralLine {
    int index = 0;  // 1-based position in nondecreasing eigenvalue order
    Rational lambda;
    int multiplicity = 0;
    double gamma_minus = 0.0;
    double gamma_plus = 0.0;
    double beta = 0.0;
    Rational discriminant;  // ((n-2)/2)^2 + lambda
    std::optional<Rational> beta_exact;
    std::optional<Rational> gamma_plus_exact;
    std::optional<Rational> gamma_minus_exact;
    // sphere-harmonic bidegrees (k,m) producing this eigenvalue, sorted
    // lexicographically; multiplicity sums their harmonic dimensions
    std::vector<std::pair<int, int>> labels;
};

// Dimension of the space of degree-k spherical harmonics on S^d.
BigInt sphere_harmonic_dim(int d, int k);

// First `count` distinct eigen-levels, merged across (k,m) pairs with equal
// eigenvalue and sorted increasingly.  lambda_1 = -(n-1) always.
std::vector<SpectralLine> spectrum(const ConeSpec& cone, int count);

// Delimited export: j,lambda,multiplicity,gamma_minus,gamma_plus,beta,k,m
// (one row per level; k,m is the lexicographically first label).  Rational
// quantities print exactly; irrational ones with 17 significant digits.
std::string spectrum_csv(std::span<const SpectralLine> lines);

}  // namespace conekit
