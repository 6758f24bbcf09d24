#pragma once

#include <array>
#include <span>
#include <vector>

#include "conekit/beta_poly.hpp"
#include "conekit/half_ball.hpp"

namespace conekit {

struct ModeCoefficient {
    int q = 0;
    double coeff = 0.0;  // <u(rho .), h_q/N_q> over nu_+
    double n_q = 0.0;    // L2(nu_+) norm of the degree-q basis polynomial
};

// Projection of a half-ball field, sampled on the sphere of radius rho, onto
// the normalized beta-harmonic polynomial traces.  For ell = 1 the basis is
// generated from y^q; for ell >= 2 (y-radial fields) from |y|^{2k}, so only
// even degrees occur.  Bessel: sum coeff^2 <= trace_l2_sq.
struct ModeExpansion {
    int ell = 1;
    double beta = 1.0;
    double rho = 0.5;
    int max_degree = 0;
    std::vector<ModeCoefficient> coefficients;
    double trace_l2_sq = 0.0;
    double residual_sq = 0.0;  // trace_l2_sq - sum coeff^2
};

ModeExpansion expand_on_sphere(const HalfBallField& field, double rho, int max_degree,
                               int quad_order = 64);

struct Reconstruction {
    std::vector<double> values;
    // L2(nu_+) norm of the part of the trace missed by the truncation
    double truncation_bound = 0.0;
};

// Evaluates sum_q coeff_q rho^{-q} h_q(r,y) / N_q at the given (r, z) points.
Reconstruction reconstruct(const ModeExpansion& expansion,
                           std::span<const std::array<double, 2>> points);

// Sup-norm gap between the reconstruction and the source field over the
// half-ball of radius rho_eval.
double reconstruction_gap(const ModeExpansion& expansion, const HalfBallField& source,
                          double rho_eval, int samples = 48);

}  // namespace conekit
