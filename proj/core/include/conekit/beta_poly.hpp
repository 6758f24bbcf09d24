#pragma once

#include <optional>
#include <span>
#include <vector>

#include "conekit/multipoly.hpp"
#include "conekit/quadrature.hpp"
#include "conekit/rational.hpp"

namespace conekit {

// Polynomial in (r, y_1..y_ell) that is even in r, stored by powers of r^2:
//   P(r,y) = sum_j r^{2j} layers[j](y).
// Odd powers of r are rejected at construction; the beta-Laplacian maps this
// class to itself.
struct RYTerm {
    unsigned r_power = 0;  // must be even
    Monomial y_exps;
    Rational coeff;
};

class RYPoly {
public:
    RYPoly() = default;
    explicit RYPoly(unsigned ell) : ell_(ell) {}
    static RYPoly from_terms(unsigned ell, std::span<const RYTerm> terms);

    unsigned ell() const { return ell_; }
    bool is_zero() const;
    const std::vector<MultiPoly>& layers() const { return layers_; }
    void set_layer(size_t j, MultiPoly p);

    RYPoly operator+(const RYPoly& o) const;
    RYPoly operator-(const RYPoly& o) const;
    RYPoly operator*(const Rational& c) const;
    bool operator==(const RYPoly& o) const;

    double eval(double r, std::span<const double> y) const;
    // ambient gradient (d/dr, d/dy_1, ..., d/dy_ell) at a point
    std::vector<double> eval_gradient(double r, std::span<const double> y) const;

    // restriction to the unit half-sphere as a polynomial in the ambient
    // coordinates (w1, w2, ..., w_{1+ell}) with w1 = r
    MultiPoly trace() const;

private:
    unsigned ell_ = 0;
    std::vector<MultiPoly> layers_;  // trailing layers trimmed, no empty tail

    void trim();
    friend class BetaPolynomial;
};

// Delta_beta P = r^{-1-beta} d/dr ( r^{1+beta} dP/dr ) + Delta_y P applied
// symbolically; the result is exact.
RYPoly apply_beta_laplacian(const RYPoly& h, const Rational& beta);

// Double-precision snapshot of an RYPoly for tight evaluation loops
// (quadrature nodes, finite-difference stencils).
class CompiledRY {
public:
    CompiledRY() = default;
    explicit CompiledRY(const RYPoly& p);
    double eval(double r, std::span<const double> y) const;
    double eval(std::span<const double> point) const;  // point = (r, y...)

private:
    struct Term {
        Monomial exps;
        double c;
    };
    std::vector<std::vector<Term>> layers_;
};

// Homogeneous beta-harmonic polynomial of degree q determined by its leading
// y-layer p0:
//   h(r,y) = sum_j r^{2j} p_j(y),   p_{j+1} = -[(2j+2)(2j+2+beta)]^{-1} Delta_y p_j.
// Closing the recursion gives p_j = c_j(beta) Delta_y^j p0 with the scalar
// c_j(beta) = (-1)^j / prod_{i=1..j} (2i)(2i+beta), which is what makes a
// symbolic-beta representation possible: the polynomial part of every layer
// is beta-free.
class BetaPolynomial {
public:
    BetaPolynomial() = default;

    // Numeric weight exponent; requires beta > 0 and p0 homogeneous.
    static BetaPolynomial generate(const Rational& beta, unsigned ell, const MultiPoly& p0);
    // Keeps beta as an indeterminate; layers are exposed through
    // symbolic_layer().
    static BetaPolynomial generate_symbolic(unsigned ell, const MultiPoly& p0);

    bool is_zero() const { return lap_powers_.empty() || lap_powers_[0].is_zero(); }
    bool has_symbolic_beta() const { return !beta_.has_value(); }
    const Rational& beta() const;
    double beta_double() const;
    unsigned ell() const { return ell_; }
    // homogeneity degree q (0 for the zero polynomial)
    int degree() const;
    size_t layer_count() const { return lap_powers_.size(); }
    const MultiPoly& leading_layer() const;

    // layer j with the beta-dependent scalar folded in (numeric beta only)
    MultiPoly layer(size_t j) const;
    RYPoly as_rypoly() const;

    // Canonical symbolic form of layer j:
    //   num / prod_{a in den_offsets}(beta + a) * poly
    // with poly primitive (content 1, positive leading coefficient).
    struct SymbolicLayer {
        Rational num;
        std::vector<int> den_offsets;
        MultiPoly poly;
        bool operator==(const SymbolicLayer& o) const = default;
    };
    SymbolicLayer symbolic_layer(size_t j) const;

    BetaPolynomial scaled(const Rational& c) const;

    double eval(double r, std::span<const double> y) const;

    bool operator==(const BetaPolynomial& o) const;

private:
    std::optional<Rational> beta_;
    unsigned ell_ = 0;
    std::vector<MultiPoly> lap_powers_;  // Delta_y^j p0
};

// Weighted measure nu_+ = w1^{1+beta} dmu on the half-sphere S^ell_+,
// realized as a quadrature rule whose total mass is validated against the
// Gamma-function closed form to 1e-10 relative at construction.
struct HalfSphereMeasure {
    int ell = 1;
    double beta = 1.0;
    Cubature rule;
    double total_mass = 0.0;

    static HalfSphereMeasure create(int ell, double beta, int order = 40);
};

// <h1, h2> over nu_+, evaluated along two independent routes.
struct InnerProduct {
    double value = 0.0;           // the Gamma-moment route
    double via_quadrature = 0.0;
    double via_moments = 0.0;
    double rel_gap = 0.0;         // |quad - moments| / (N1 N2)
};

InnerProduct sphere_inner_product(const RYPoly& h1, const RYPoly& h2,
                                  const HalfSphereMeasure& measure);
InnerProduct sphere_inner_product(const BetaPolynomial& h1, const BetaPolynomial& h2,
                                  const HalfSphereMeasure& measure);

// int_{B_R^+} h^2 r^{1+beta} dr dy.  The analytic route is
// (ell+2+beta+2q)^{-1} N_q^2 R^{ell+2+beta+2q}; the quadrature route
// integrates over the half-ball directly.
struct BallL2 {
    double analytic = 0.0;
    double quadrature = 0.0;
    double rel_gap = 0.0;
};

BallL2 weighted_ball_l2(const BetaPolynomial& h, double R, int quad_points = 96);

// Weak residual of the spherical eigen-identity
//   int grad_S h . grad_S z dnu_+ = q(q+ell+beta) int h z dnu_+
// maximized over a battery of smooth polynomial test functions z.  The sign
// is the one consistent with Delta_beta h = 0.
double spherical_eigen_check(const BetaPolynomial& h, int order = 48);

}  // namespace conekit
