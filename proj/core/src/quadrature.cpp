#include "conekit/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>

namespace conekit {

QuadRule gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: need n >= 1");
    QuadRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 1; i <= m; ++i) {
        // Newton iteration from the Chebyshev estimate of the i-th root
        double z = std::cos(std::numbers::pi * (i - 0.25) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-15) break;
        }
        rule.nodes[i - 1] = -z;
        rule.nodes[n - i] = z;
        rule.weights[i - 1] = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.weights[n - i] = rule.weights[i - 1];
    }
    return rule;
}

QuadRule gauss_jacobi(int n, double a, double b) {
    if (n < 1) throw std::invalid_argument("gauss_jacobi: need n >= 1");
    if (a <= -1.0 || b <= -1.0) throw std::invalid_argument("gauss_jacobi: exponents must be > -1");

    // Recurrence coefficients of the monic Jacobi polynomials
    Eigen::VectorXd alpha(n), sqrtbeta(n > 1 ? n - 1 : 0);
    alpha[0] = (b - a) / (a + b + 2.0);
    for (int k = 1; k < n; ++k) {
        double s = 2.0 * k + a + b;
        alpha[k] = (b * b - a * a) / (s * (s + 2.0));
    }
    for (int k = 1; k < n; ++k) {
        double s = 2.0 * k + a + b;
        double num = 4.0 * k * (k + a) * (k + b) * (k + a + b);
        double den = s * s * (s + 1.0) * (s - 1.0);
        if (k == 1) {
            num = 4.0 * (1.0 + a) * (1.0 + b);
            den = (a + b + 2.0) * (a + b + 2.0) * (a + b + 3.0);
        }
        sqrtbeta[k - 1] = std::sqrt(num / den);
    }

    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k < n; ++k) J(k, k) = alpha[k];
    for (int k = 0; k + 1 < n; ++k) {
        J(k, k + 1) = sqrtbeta[k];
        J(k + 1, k) = sqrtbeta[k];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    if (es.info() != Eigen::Success) throw std::runtime_error("gauss_jacobi: eigensolve failed");

    const double mu0 = std::pow(2.0, a + b + 1.0) *
                       std::exp(std::lgamma(a + 1.0) + std::lgamma(b + 1.0) - std::lgamma(a + b + 2.0));

    QuadRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int k = 0; k < n; ++k) {
        rule.nodes[k] = es.eigenvalues()[k];
        double v0 = es.eigenvectors()(0, k);
        rule.weights[k] = mu0 * v0 * v0;
    }
    return rule;
}

double integrate(const QuadRule& rule, double lo, double hi,
                 const std::function<double(double)>& f) {
    const double mid = 0.5 * (hi + lo), half = 0.5 * (hi - lo);
    double sum = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i)
        sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return half * sum;
}

double integrate_radial(double lo, double hi, const std::function<double(double)>& f,
                        int nodes_per_unit) {
    if (hi < lo) throw std::invalid_argument("integrate_radial: empty interval");
    if (hi == lo) return 0.0;
    static thread_local QuadRule cached;  // nodes_per_unit rarely changes
    if (static_cast<int>(cached.nodes.size()) != nodes_per_unit) cached = gauss_legendre(nodes_per_unit);

    // breakpoints: geometric refinement toward r = 0 (integrands here often
    // live on many dyadic scales), then unit-length pieces
    std::vector<double> cuts{lo};
    if (lo > 0.0 && lo < 0.5) {
        double x = lo;
        while (x * 4.0 < std::min(1.0, hi)) {
            x *= 4.0;
            cuts.push_back(x);
        }
    }
    double start = cuts.back();
    int pieces = std::max(1, static_cast<int>(std::ceil(hi - start)));
    for (int k = 1; k <= pieces; ++k) cuts.push_back(start + (hi - start) * k / pieces);

    double sum = 0.0;
    for (size_t k = 0; k + 1 < cuts.size(); ++k) sum += integrate(cached, cuts[k], cuts[k + 1], f);
    return sum;
}

double Cubature::apply(const std::function<double(std::span<const double>)>& f) const {
    double sum = 0.0;
    for (size_t k = 0; k < points.size(); ++k) sum += weights[k] * f(points[k]);
    return sum;
}

Cubature sphere_rule(int m, int order) {
    if (m < 0) throw std::invalid_argument("sphere_rule: dimension must be >= 0");
    Cubature rule;
    if (m == 0) {
        rule.points = {{1.0}, {-1.0}};
        rule.weights = {1.0, 1.0};
        return rule;
    }
    if (m == 1) {
        int npts = std::max(4, 2 * (order + 1));
        const double w = 2.0 * std::numbers::pi / npts;
        for (int k = 0; k < npts; ++k) {
            double phi = 2.0 * std::numbers::pi * (k + 0.5) / npts;
            rule.points.push_back({std::cos(phi), std::sin(phi)});
            rule.weights.push_back(w);
        }
        return rule;
    }
    // polar reduction: w = (z, sqrt(1-z^2) u), dmu = (1-z^2)^{(m-2)/2} dz dmu_{S^{m-1}}
    int npolar = std::max(2, order / 2 + 2);
    QuadRule polar = gauss_jacobi(npolar, 0.5 * (m - 2), 0.5 * (m - 2));
    Cubature lower = sphere_rule(m - 1, order);
    for (size_t i = 0; i < polar.nodes.size(); ++i) {
        double z = polar.nodes[i];
        double s = std::sqrt(std::max(0.0, 1.0 - z * z));
        for (size_t k = 0; k < lower.points.size(); ++k) {
            std::vector<double> pt(m + 1);
            pt[0] = z;
            for (int d = 0; d < m; ++d) pt[d + 1] = s * lower.points[k][d];
            rule.points.push_back(std::move(pt));
            rule.weights.push_back(polar.weights[i] * lower.weights[k]);
        }
    }
    return rule;
}

Cubature half_sphere_rule(int ell, double beta, int order) {
    if (ell < 1) throw std::invalid_argument("half_sphere_rule: ell must be >= 1");
    if (beta <= 0.0) throw std::invalid_argument("half_sphere_rule: beta must be > 0");
    Cubature rule;
    if (ell == 1) {
        // t = sin(theta): integral over (-pi/2,pi/2) of f cos^{1+beta} becomes
        // a Gauss-Jacobi integral with weight (1-t^2)^{beta/2}
        int n = std::max(2, order / 2 + 2);
        QuadRule gj = gauss_jacobi(n, 0.5 * beta, 0.5 * beta);
        for (int i = 0; i < n; ++i) {
            double t = gj.nodes[i];
            rule.points.push_back({std::sqrt(std::max(0.0, 1.0 - t * t)), t});
            rule.weights.push_back(gj.weights[i]);
        }
        return rule;
    }
    // x = 2 w1^2 - 1 maps the polar integral to weight (1-x)^{(ell-2)/2} (1+x)^{beta/2}
    int n = std::max(2, order / 2 + 2);
    QuadRule gj = gauss_jacobi(n, 0.5 * (ell - 2), 0.5 * beta);
    Cubature lower = sphere_rule(ell - 1, order);
    const double scale = std::pow(2.0, -(0.5 * (ell - 2) + 0.5 * beta + 2.0));
    for (int i = 0; i < n; ++i) {
        double t = std::sqrt(0.5 * (1.0 + gj.nodes[i]));
        double s = std::sqrt(std::max(0.0, 1.0 - t * t));
        for (size_t k = 0; k < lower.points.size(); ++k) {
            std::vector<double> pt(ell + 1);
            pt[0] = t;
            for (int d = 0; d < ell; ++d) pt[d + 1] = s * lower.points[k][d];
            rule.points.push_back(std::move(pt));
            rule.weights.push_back(scale * gj.weights[i] * lower.weights[k]);
        }
    }
    return rule;
}

Cubature half_ball_rule(int ell, double beta, double R, int n) {
    if (ell < 1) throw std::invalid_argument("half_ball_rule: ell must be >= 1");
    if (R <= 0.0) throw std::invalid_argument("half_ball_rule: R must be > 0");
    QuadRule gl = gauss_legendre(n);
    QuadRule gj = gauss_jacobi(n, 0.0, 1.0 + beta);
    Cubature angular = sphere_rule(ell - 1, 2 * n);
    Cubature rule;
    for (int is = 0; is < n; ++is) {
        // s = |y| in [0, R]
        double s = 0.5 * R * (gl.nodes[is] + 1.0);
        double ws = 0.5 * R * gl.weights[is] * std::pow(s, ell - 1);
        double rmax = std::sqrt(std::max(0.0, R * R - s * s));
        double rscale = std::pow(0.5 * rmax, 2.0 + beta);
        for (int ir = 0; ir < n; ++ir) {
            double r = 0.5 * rmax * (gj.nodes[ir] + 1.0);
            for (size_t k = 0; k < angular.points.size(); ++k) {
                std::vector<double> pt(1 + ell);
                pt[0] = r;
                for (int d = 0; d < ell; ++d) pt[d + 1] = s * angular.points[k][d];
                rule.points.push_back(std::move(pt));
                rule.weights.push_back(ws * rscale * gj.weights[ir] * angular.weights[k]);
            }
        }
    }
    return rule;
}

double half_sphere_monomial_moment(int ell, double beta, std::span<const unsigned> exps) {
    if (static_cast<int>(exps.size()) != ell + 1)
        throw std::invalid_argument("half_sphere_monomial_moment: need 1+ell exponents");
    double sum_d = 0.0;
    double log_num = 0.0;
    for (int i = 0; i <= ell; ++i) {
        double d = static_cast<double>(exps[i]);
        if (i == 0) d += 1.0 + beta;  // the nu_+ weight
        else if (exps[i] % 2 == 1) return 0.0;  // odd power integrates to zero
        log_num += std::lgamma(0.5 * (d + 1.0));
        sum_d += d;
    }
    return std::exp(log_num - std::lgamma(0.5 * (ell + 1 + sum_d)));
}

}  // namespace conekit
