#include "conekit/growth.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace conekit {

GrowthProfile GrowthProfile::analytic(std::vector<double> exponents, std::vector<double> coeff_sq) {
    if (exponents.size() != coeff_sq.size())
        throw std::invalid_argument("GrowthProfile: exponent/coefficient size mismatch");
    for (size_t i = 0; i < exponents.size(); ++i) {
        if (coeff_sq[i] < 0.0)
            throw std::invalid_argument("GrowthProfile: squared coefficients must be >= 0");
        if (i > 0 && exponents[i] <= exponents[i - 1])
            throw std::invalid_argument("GrowthProfile: exponents must be strictly increasing");
    }
    GrowthProfile p;
    p.source_ = Source::analytic;
    p.exponents_ = std::move(exponents);
    p.coeff_sq_ = std::move(coeff_sq);
    return p;
}

GrowthProfile GrowthProfile::sampled(std::vector<std::pair<double, double>> samples) {
    GrowthProfile p;
    p.source_ = Source::sampled;
    p.samples_ = std::move(samples);
    return p;
}

bool GrowthProfile::is_zero() const {
    if (source_ == Source::sampled) {
        for (const auto& [rho, v] : samples_)
            if (v != 0.0) return false;
        return true;
    }
    for (double b : coeff_sq_)
        if (b != 0.0) return false;
    return true;
}

double GrowthProfile::value(double rho) const {
    if (source_ != Source::analytic)
        throw std::logic_error("GrowthProfile::value: sampled profile has no closed form");
    double sum = 0.0;
    for (size_t i = 0; i < exponents_.size(); ++i)
        sum += coeff_sq_[i] * std::pow(rho, 2.0 * exponents_[i]);
    return sum;
}

double GrowthProfile::psi(double t) const { return std::log(value(std::exp(t))); }

std::vector<double> exponent_ladder(std::span<const SpectralLine> lines, int max_q) {
    if (lines.empty()) throw std::invalid_argument("exponent_ladder: empty spectrum");
    if (max_q < 0) throw std::invalid_argument("exponent_ladder: max_q must be >= 0");
    const double beta1 = lines[0].beta;
    std::vector<double> ladder;
    for (const auto& line : lines) {
        if (!(line.beta >= beta1))  // NaN (complex exponents) or misordered
            throw std::invalid_argument("exponent_ladder: spectrum must come from a strictly stable cone");
        const double shift = 0.5 * (line.beta - beta1);
        for (int q = 0; q <= max_q; ++q) ladder.push_back(q + shift);
    }
    std::sort(ladder.begin(), ladder.end());
    std::vector<double> merged;
    for (double e : ladder) {
        if (merged.empty() || e - merged.back() > 1e-12) merged.push_back(e);
    }
    return merged;
}

double psi_convexity(const GrowthProfile& profile, double t_lo, double t_hi, int n_t, double h) {
    if (profile.is_zero())
        throw std::invalid_argument("psi_convexity: zero profile (log undefined)");
    if (n_t < 1 || h <= 0.0 || t_hi < t_lo)
        throw std::invalid_argument("psi_convexity: malformed grid");
    double worst = std::numeric_limits<double>::infinity();
    for (int k = 0; k < n_t; ++k) {
        double t = n_t == 1 ? t_lo : t_lo + (t_hi - t_lo) * k / (n_t - 1);
        double second_diff = profile.psi(t + h) - 2.0 * profile.psi(t) + profile.psi(t - h);
        worst = std::min(worst, second_diff);
    }
    return worst;
}

DichotomyResult doubling_dichotomy(const GrowthProfile& profile, double Q, double rho) {
    if (profile.is_zero())
        throw std::invalid_argument("doubling_dichotomy: profile must be nonzero");
    if (!(Q > 0.0)) throw std::invalid_argument("doubling_dichotomy: Q must be > 0");
    for (double q : profile.exponents()) {
        double forbidden = std::pow(4.0, q);
        if (std::abs(Q - forbidden) <= 1e-9 * std::max(1.0, forbidden))
            throw std::invalid_argument("doubling_dichotomy: Q collides with forbidden value 4^q");
    }
    DichotomyResult out;
    out.ratio_small = profile.value(rho / 2.0) / profile.value(rho / 4.0);
    out.ratio_large = profile.value(rho) / profile.value(rho / 2.0);
    out.premise = out.ratio_small >= Q;
    out.conclusion = out.ratio_large > Q;
    return out;
}

GapReport liouville_gap(double alpha, std::span<const double> R_values) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("liouville_gap: alpha must lie in (0,1)");
    GapReport report;
    report.alpha = alpha;
    report.margin = 2.0 - 2.0 * alpha;
    for (double R : R_values) {
        if (R <= 0.0) throw std::invalid_argument("liouville_gap: radii must be positive");
        GapRow row;
        row.R = R;
        row.lower = std::pow(R, -alpha);
        row.upper = std::pow(R, -2.0 + alpha);
        row.feasible = row.lower <= row.upper * (1.0 + 1e-15);
        if (row.feasible && R > 1.0) report.feasible_beyond_one = true;
        report.rows.push_back(row);
    }
    return report;
}

ExponentFit fit_exponents(std::span<const std::pair<double, double>> samples,
                          std::span<const double> exponents) {
    const size_t m = samples.size(), n = exponents.size();
    if (n == 0) throw std::invalid_argument("fit_exponents: empty exponent ladder");
    if (m < 2 * n)
        throw std::invalid_argument("fit_exponents: need at least twice as many samples as exponents");

    ExponentFit fit;
    double rho_min = samples[0].first, rho_max = samples[0].first;
    for (const auto& [rho, v] : samples) {
        rho_min = std::min(rho_min, rho);
        rho_max = std::max(rho_max, rho);
    }
    fit.well_conditioned = rho_max >= 2.0 * rho_min;  // at least one dyadic decade

    Eigen::MatrixXd A(m, n);
    Eigen::VectorXd v(m);
    for (size_t k = 0; k < m; ++k) {
        v(k) = samples[k].second;
        for (size_t i = 0; i < n; ++i) A(k, i) = std::pow(samples[k].first, 2.0 * exponents[i]);
    }
    // column equilibration for the inner least-squares solves
    Eigen::VectorXd col_scale(n);
    for (size_t i = 0; i < n; ++i) {
        double s = A.col(i).norm();
        col_scale(i) = s > 0.0 ? s : 1.0;
        A.col(i) /= col_scale(i);
    }

    // Lawson-Hanson active set iteration
    std::vector<bool> active(n, false);  // true: in the positive (passive) set
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd w = A.transpose() * (v - A * x);
    const double tol = 1e-12 * (A.transpose() * v).cwiseAbs().maxCoeff();
    for (int outer = 0; outer < 8 * static_cast<int>(n) + 16; ++outer) {
        int best = -1;
        double best_w = tol;
        for (size_t i = 0; i < n; ++i) {
            if (!active[i] && w(i) > best_w) {
                best_w = w(i);
                best = static_cast<int>(i);
            }
        }
        if (best < 0) break;
        active[best] = true;

        for (;;) {
            std::vector<int> idx;
            for (size_t i = 0; i < n; ++i)
                if (active[i]) idx.push_back(static_cast<int>(i));
            Eigen::MatrixXd Ap(m, idx.size());
            for (size_t c = 0; c < idx.size(); ++c) Ap.col(c) = A.col(idx[c]);
            Eigen::VectorXd z = Ap.colPivHouseholderQr().solve(v);
            double zmin = z.size() ? z.minCoeff() : 1.0;
            if (zmin > 0.0) {
                x.setZero();
                for (size_t c = 0; c < idx.size(); ++c) x(idx[c]) = z(c);
                break;
            }
            // back off to the feasibility boundary, then drop the variables
            // that hit zero
            double step = 1.0;
            for (size_t c = 0; c < idx.size(); ++c) {
                if (z(c) <= 0.0) {
                    double xi = x(idx[c]);
                    step = std::min(step, xi / (xi - z(c)));
                }
            }
            for (size_t c = 0; c < idx.size(); ++c) {
                double xi = x(idx[c]);
                double moved = xi + step * (z(c) - xi);
                if (z(c) <= 0.0 && moved <= 1e-12 * std::abs(xi - z(c))) {
                    x(idx[c]) = 0.0;
                    active[idx[c]] = false;
                } else {
                    x(idx[c]) = moved;
                }
            }
        }
        w = A.transpose() * (v - A * x);
    }

    fit.residual = (v - A * x).norm();
    fit.coeff_sq.resize(n);
    for (size_t i = 0; i < n; ++i) fit.coeff_sq[i] = x(i) / col_scale(i);
    return fit;
}

}  // namespace conekit
