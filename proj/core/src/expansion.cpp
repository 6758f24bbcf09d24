#include "conekit/expansion.hpp"

#include <cmath>
#include <stdexcept>

namespace conekit {

namespace {

// degree-q basis element; ell >= 2 carries only the y-radial modes
BetaPolynomial basis_polynomial(int ell, const Rational& beta, int q) {
    if (ell == 1) {
        Monomial m{static_cast<unsigned>(q)};
        return BetaPolynomial::generate(beta, 1, MultiPoly::monomial(m, 1));
    }
    if (q % 2 != 0) return BetaPolynomial();  // no odd y-radial polynomials
    MultiPoly radial = MultiPoly::constant(ell, 1);
    MultiPoly s2(ell);
    for (int i = 0; i < ell; ++i)
        s2 = s2 + MultiPoly::variable(ell, i) * MultiPoly::variable(ell, i);
    for (int k = 0; k < q / 2; ++k) radial = radial * s2;
    return BetaPolynomial::generate(beta, ell, radial);
}

}  // namespace

ModeExpansion expand_on_sphere(const HalfBallField& field, double rho, int max_degree,
                               int quad_order) {
    if (!(rho > 0.0) || !(rho < field.grid.rho_max))
        throw std::invalid_argument("expand_on_sphere: rho must lie in (0, rho_max)");
    if (max_degree < 0) throw std::invalid_argument("expand_on_sphere: max_degree must be >= 0");

    const int ell = field.grid.ell;
    const double beta = field.grid.beta;
    ModeExpansion out;
    out.ell = ell;
    out.beta = beta;
    out.rho = rho;
    out.max_degree = max_degree;

    HalfSphereMeasure measure = HalfSphereMeasure::create(ell, beta, quad_order);
    const auto& rule = measure.rule;

    // boundary samples of the field on the sphere of radius rho
    std::vector<double> trace(rule.points.size());
    for (size_t k = 0; k < rule.points.size(); ++k) {
        const auto& w = rule.points[k];
        double z;
        if (ell == 1) {
            z = rho * w[1];
        } else {
            double s2 = 0.0;
            for (int d = 1; d <= ell; ++d) s2 += w[d] * w[d];
            z = rho * std::sqrt(s2);
        }
        trace[k] = field.value_rz(rho * w[0], z);
        out.trace_l2_sq += rule.weights[k] * trace[k] * trace[k];
    }

    const Rational beta_exact = rational_from_double(beta);
    double captured = 0.0;
    for (int q = 0; q <= max_degree; ++q) {
        BetaPolynomial hq = basis_polynomial(ell, beta_exact, q);
        if (hq.is_zero()) continue;
        RYPoly p = hq.as_rypoly();
        double nq_sq = 0.0, proj = 0.0;
        for (size_t k = 0; k < rule.points.size(); ++k) {
            const auto& w = rule.points[k];
            double v = p.eval(w[0], std::span<const double>(w).subspan(1));
            nq_sq += rule.weights[k] * v * v;
            proj += rule.weights[k] * v * trace[k];
        }
        double nq = std::sqrt(nq_sq);
        ModeCoefficient mc;
        mc.q = q;
        mc.n_q = nq;
        mc.coeff = nq > 0.0 ? proj / nq : 0.0;
        captured += mc.coeff * mc.coeff;
        out.coefficients.push_back(mc);
    }
    out.residual_sq = out.trace_l2_sq - captured;
    return out;
}

Reconstruction reconstruct(const ModeExpansion& expansion,
                           std::span<const std::array<double, 2>> points) {
    const int ell = expansion.ell;
    const Rational beta = rational_from_double(expansion.beta);

    std::vector<RYPoly> basis;
    std::vector<double> scale;
    for (const auto& mc : expansion.coefficients) {
        BetaPolynomial hq = basis_polynomial(ell, beta, mc.q);
        basis.push_back(hq.as_rypoly());
        double s = mc.n_q > 0.0 ? mc.coeff / (mc.n_q * std::pow(expansion.rho, mc.q)) : 0.0;
        scale.push_back(s);
    }
    Reconstruction out;
    out.truncation_bound = std::sqrt(std::max(0.0, expansion.residual_sq));
    out.values.assign(points.size(), 0.0);
    for (size_t i = 0; i < points.size(); ++i) {
        double r = points[i][0];
        std::vector<double> y(static_cast<size_t>(ell), 0.0);
        y[0] = points[i][1];  // y-radial convention for ell >= 2
        double sum = 0.0;
        for (size_t b = 0; b < basis.size(); ++b) {
            if (scale[b] == 0.0) continue;
            sum += scale[b] * basis[b].eval(r, y);
        }
        out.values[i] = sum;
    }
    return out;
}

double reconstruction_gap(const ModeExpansion& expansion, const HalfBallField& source,
                          double rho_eval, int samples) {
    std::vector<std::array<double, 2>> pts;
    for (int i = 1; i <= samples; ++i) {
        for (int j = 0; j < samples; ++j) {
            double rho = rho_eval * i / samples;
            double lo = source.grid.theta_lo, hi = source.grid.theta_hi;
            double theta = lo + (hi - lo) * (j + 0.5) / samples;
            pts.push_back({rho * std::cos(theta), rho * std::sin(theta)});
        }
    }
    Reconstruction rec = reconstruct(expansion, pts);
    double gap = 0.0;
    for (size_t k = 0; k < pts.size(); ++k) {
        double ref = source.value_rz(pts[k][0], pts[k][1]);
        gap = std::max(gap, std::abs(ref - rec.values[k]));
    }
    return gap;
}

}  // namespace conekit
