#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "conekit/beta_poly.hpp"
#include "conekit/cone.hpp"
#include "conekit/growth.hpp"
#include "conekit/spectrum.hpp"

namespace conekit {

// One separated component of a Jacobi field on the cylinder C0 x R^ell:
// amplitude * r^{gamma_j} h(r,y) against the j-th eigenfunction of the
// cross-section.  The polynomial must be beta_j-harmonic.
struct JacobiMode {
    int j = 1;
    int q = 0;
    Rational amplitude = 1;
    BetaPolynomial poly;
};

struct JacobiFieldSpec {
    ConeSpec cone;
    int ell = 1;
    std::vector<JacobiMode> modes;
    double r_min = 1e-2;  // annulus keeping negative-exponent modes finite
    double r_max = 1.0;
};

// Radial-y profile of one spectral component; the angular factor phi_j stays
// symbolic (only its orthonormality is ever used).
struct ModeProfile {
    int j = 1;
    double gamma = 0.0;
    double beta = 0.0;
    Rational lambda;
    std::vector<std::pair<double, CompiledRY>> parts;  // (amplitude, h_{j,q})

    double eval(double r, std::span<const double> y) const;
};

// Validates mode data against the cone spectrum (beta of each polynomial
// must match beta_j) and returns the per-j profiles.  Requires a strictly
// stable cone; only the gamma^+ branch is synthesized.
std::vector<ModeProfile> synthesize(const JacobiFieldSpec& spec);

struct AnnulusGrid {
    double r_lo = 1e-2;
    double r_hi = 1.0;
    double y_half = 0.5;  // y box [-y_half, y_half]^ell
    double h = 1e-2;      // grid spacing, shared by r and y
};

// Max absolute finite-difference residual of
//   v_rr + (n-1)/r v_r + Delta_y v - lambda_j r^{-2} v
// over the annulus (fourth-order central stencils).  Rejects grids whose
// stencil would touch r <= 0.
double separated_ode_residual(const std::function<double(double, std::span<const double>)>& v,
                              const ConeSpec& cone, int j, int ell, const AnnulusGrid& grid);
double separated_ode_residual(const ModeProfile& profile, const ConeSpec& cone, int ell,
                              const AnnulusGrid& grid);

// h(r,y) = r^{-gamma} v(r,y), checked against Delta_beta h = 0 by finite
// differences with beta = beta_j.
double mode_projection_residual(const std::function<double(double, std::span<const double>)>& v,
                                double gamma, double beta, int ell, const AnnulusGrid& grid);

// Exact route for rational amplitudes: the summed polynomial h_j = sum_q
// amplitude * h_{j,q}, whose beta_j-Laplacian vanishes symbolically.
RYPoly mode_projection_exact(const JacobiFieldSpec& spec, int j);

// The scale-normalized ball average of Sigma_j v_j^2 along the given radii:
// analytic per-mode homogeneities (feeding a GrowthProfile) cross-checked by
// direct half-ball quadrature.
struct AvintProfile {
    std::vector<double> radii;
    std::vector<double> analytic;
    std::vector<double> quadrature;
    GrowthProfile growth;  // analytic (q_i, b_i^2) form
};

AvintProfile avint_profile(const JacobiFieldSpec& spec, std::span<const double> radii,
                           int quad_points = 80);

// Delimited export: rho, avint_analytic, avint_quadrature, relative_gap.
std::string avint_csv(const AvintProfile& profile);

}  // namespace conekit
