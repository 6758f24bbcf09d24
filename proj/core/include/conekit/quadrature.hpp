#pragma once

#include <functional>
#include <span>
#include <vector>

namespace conekit {

// One-dimensional rule on [-1, 1].
struct QuadRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

QuadRule gauss_legendre(int n);

// Nodes/weights for the Jacobi weight (1-x)^a (1+x)^b on [-1,1], a,b > -1.
// Golub-Welsch; the total mass mu0 = 2^{a+b+1} B(a+1, b+1) is absorbed
// into the weights.
QuadRule gauss_jacobi(int n, double a, double b);

// Integral of f over [lo, hi] with a single mapped Gauss-Legendre rule.
double integrate(const QuadRule& rule, double lo, double hi,
                 const std::function<double(double)>& f);

// Composite Gauss-Legendre, 64 nodes per unit of interval length.
double integrate_radial(double lo, double hi, const std::function<double(double)>& f,
                        int nodes_per_unit = 64);

// Cubature on a sphere or weighted half-sphere/half-ball.  Points are stored
// in ambient coordinates; weights absorb all measure factors so that
// sum w_k f(point_k) approximates the target integral directly.
struct Cubature {
    std::vector<std::vector<double>> points;
    std::vector<double> weights;

    double apply(const std::function<double(std::span<const double>)>& f) const;
};

// Quadrature on the unit sphere S^m in R^{m+1}, exact for polynomials of
// degree <= order (uniform measure).
Cubature sphere_rule(int m, int order);

// Quadrature for the measure d(nu_+) = w1^{1+beta} dmu on the half-sphere
// S^ell_+ = { w in R^{1+ell} : |w| = 1, w1 > 0 }.  Exact for polynomial
// integrands of degree <= order that are even in w1 (the only traces that
// occur here: polynomials in r^2, y restrict to such functions).
Cubature half_sphere_rule(int ell, double beta, int order);

// Quadrature for integral over { (r,y) : r > 0, r^2+|y|^2 <= R^2 } of
// f(r,y) r^{1+beta} dr dy.  Points are (r, y_1..y_ell).  The slice radius
// sqrt(R^2-s^2) is not polynomial, so this rule is only asymptotically
// exact; `n` controls nodes per direction.
Cubature half_ball_rule(int ell, double beta, double R, int n);

// Exact moment of the monomial prod_i w_i^{exps[i]} against nu_+ on
// S^ell_+ (Gamma-function closed form); exps has 1+ell entries.
double half_sphere_monomial_moment(int ell, double beta, std::span<const unsigned> exps);

}  // namespace conekit
