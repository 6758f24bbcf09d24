#pragma once

#include <span>
#include <utility>
#include <vector>

#include "conekit/spectrum.hpp"

namespace conekit {

// Averaged L2 profile of a Jacobi field: either the analytic form
// value(rho) = sum_i b_i^2 rho^{2 q_i} with strictly increasing exponents,
// or raw (rho, value) samples from quadrature.
class GrowthProfile {
public:
    enum class Source { analytic, sampled };

    static GrowthProfile analytic(std::vector<double> exponents, std::vector<double> coeff_sq);
    static GrowthProfile sampled(std::vector<std::pair<double, double>> samples);

    Source source() const { return source_; }
    const std::vector<double>& exponents() const { return exponents_; }
    const std::vector<double>& coeff_sq() const { return coeff_sq_; }
    const std::vector<std::pair<double, double>>& samples() const { return samples_; }

    bool is_zero() const;
    double value(double rho) const;  // analytic form only
    double psi(double t) const;      // log value(e^t)

private:
    Source source_ = Source::analytic;
    std::vector<double> exponents_;
    std::vector<double> coeff_sq_;
    std::vector<std::pair<double, double>> samples_;
};

// Merged homogeneities { q + (beta_j - beta_1)/2 : lines j, 0 <= q <= max_q },
// sorted, duplicates within 1e-12 collapsed (exactly when the betas are
// exact rationals).  The first entry is always 0.
std::vector<double> exponent_ladder(std::span<const SpectralLine> lines, int max_q);

// Minimum of psi(t+h) - 2 psi(t) + psi(t-h) over an evenly spaced t-grid.
// Convexity of psi makes this >= 0 up to roundoff for analytic profiles.
double psi_convexity(const GrowthProfile& profile, double t_lo, double t_hi, int n_t,
                     double h);

struct DichotomyResult {
    double ratio_small = 0.0;  // value(rho/2) / value(rho/4)
    double ratio_large = 0.0;  // value(rho)   / value(rho/2)
    bool premise = false;      // ratio_small >= Q
    bool conclusion = false;   // ratio_large >  Q
};

// The doubling implication at scale rho for a threshold Q off the forbidden
// set {4^{q_i}}; Q within 1e-9 of a forbidden value is rejected.
DichotomyResult doubling_dichotomy(const GrowthProfile& profile, double Q, double rho);

struct GapRow {
    double R = 0.0;
    double lower = 0.0;  // R^{-alpha}
    double upper = 0.0;  // R^{-2+alpha}
    bool feasible = false;
};

struct GapReport {
    double alpha = 0.0;
    double margin = 0.0;  // 2 - 2 alpha, the exponent gap
    std::vector<GapRow> rows;
    bool feasible_beyond_one = false;  // any feasible row with R > 1
};

// Feasibility of the simultaneous growth bounds R^{-alpha} <= A <= R^{-2+alpha};
// impossible for every R > 1.  Requires alpha in (0,1).
GapReport liouville_gap(double alpha, std::span<const double> R_values);

struct ExponentFit {
    std::vector<double> coeff_sq;
    double residual = 0.0;         // two-norm of the data misfit
    bool well_conditioned = true;  // false when the radii span < one dyadic decade
};

// Nonnegative least squares of samples (rho_k, value_k) in the basis
// rho^{2 q_i}.  Needs at least twice as many samples as exponents.
ExponentFit fit_exponents(std::span<const std::pair<double, double>> samples,
                          std::span<const double> exponents);

}  // namespace conekit
