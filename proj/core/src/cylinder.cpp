#include "conekit/cylinder.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

#include "conekit/quadrature.hpp"

namespace conekit {

double ModeProfile::eval(double r, std::span<const double> y) const {
    double sum = 0.0;
    for (const auto& [amp, poly] : parts) sum += amp * poly.eval(r, y);
    return std::pow(r, gamma) * sum;
}

namespace {

std::vector<SpectralLine> spectrum_through(const ConeSpec& cone, const std::vector<JacobiMode>& modes) {
    int top = 1;
    for (const auto& m : modes) top = std::max(top, m.j);
    return spectrum(cone, top);
}

void validate_mode(const JacobiMode& mode, const SpectralLine& line, int ell) {
    if (mode.j < 1) throw std::invalid_argument("JacobiMode: spectral index must be >= 1");
    if (line.discriminant < 0)
        throw std::invalid_argument("JacobiMode: level has complex exponents (unstable cone)");
    if (mode.poly.is_zero()) return;
    if (static_cast<int>(mode.poly.ell()) != ell)
        throw std::invalid_argument("JacobiMode: polynomial arity does not match ell");
    if (mode.poly.degree() != mode.q)
        throw std::invalid_argument("JacobiMode: polynomial degree does not match q");
    // the polynomial weight must be the level's beta_j
    if (line.beta_exact) {
        if (mode.poly.beta() != *line.beta_exact)
            throw std::invalid_argument("JacobiMode: polynomial beta differs from beta_j");
    } else if (std::abs(to_double(mode.poly.beta()) - line.beta) > 1e-12 * (1.0 + line.beta)) {
        throw std::invalid_argument("JacobiMode: polynomial beta differs from beta_j");
    }
}

}  // namespace

std::vector<ModeProfile> synthesize(const JacobiFieldSpec& spec) {
    if (spec.ell < 1) throw std::invalid_argument("synthesize: ell must be >= 1");
    if (spec.r_min <= 0.0 || spec.r_max <= spec.r_min)
        throw std::invalid_argument("synthesize: need 0 < r_min < r_max (profiles blow up at the axis)");
    if (strict_stability(spec.cone).classification != StabilityClass::strictly_stable)
        throw std::invalid_argument("synthesize: cone must be strictly stable");
    auto lines = spectrum_through(spec.cone, spec.modes);

    std::map<int, ModeProfile> by_level;
    for (const auto& mode : spec.modes) {
        const SpectralLine& line = lines.at(mode.j - 1);
        validate_mode(mode, line, spec.ell);
        auto& profile = by_level[mode.j];
        profile.j = mode.j;
        profile.gamma = line.gamma_plus;
        profile.beta = line.beta;
        profile.lambda = line.lambda;
        profile.parts.emplace_back(to_double(mode.amplitude), CompiledRY(mode.poly.as_rypoly()));
    }
    std::vector<ModeProfile> out;
    out.reserve(by_level.size());
    for (auto& [j, profile] : by_level) out.push_back(std::move(profile));
    return out;
}

namespace {

// fourth-order central difference stencils
constexpr double kD1[5] = {1.0 / 12, -8.0 / 12, 0.0, 8.0 / 12, -1.0 / 12};
constexpr double kD2[5] = {-1.0 / 12, 16.0 / 12, -30.0 / 12, 16.0 / 12, -1.0 / 12};

}  // namespace

double separated_ode_residual(const std::function<double(double, std::span<const double>)>& v,
                              const ConeSpec& cone, int j, int ell, const AnnulusGrid& grid) {
    if (ell < 1 || ell > 2)
        throw std::invalid_argument("separated_ode_residual: ell must be 1 or 2");
    if (grid.r_lo - 2.0 * grid.h <= 0.0)
        throw std::invalid_argument("separated_ode_residual: stencil touches the axis r = 0");
    if (grid.h <= 0.0 || grid.r_hi <= grid.r_lo)
        throw std::invalid_argument("separated_ode_residual: malformed grid");

    const double lambda_j = to_double(spectrum(cone, j).at(j - 1).lambda);
    const int n = cone.n;
    const double h = grid.h;
    const int nr = static_cast<int>(std::floor((grid.r_hi - grid.r_lo) / h)) + 1;
    const int ny = std::max(1, static_cast<int>(std::floor(2.0 * grid.y_half / h)) + 1);

    std::vector<double> y(static_cast<size_t>(ell), 0.0);
    std::vector<double> yshift(static_cast<size_t>(ell), 0.0);
    double worst = 0.0;
    for (int ir = 0; ir < nr; ++ir) {
        const double r = grid.r_lo + ir * h;
        for (int iy = 0; iy < ny; ++iy) {
            y[0] = ny == 1 ? 0.0 : -grid.y_half + iy * (2.0 * grid.y_half / (ny - 1));
            if (ell == 2) y[1] = 0.25 * y[0];  // off-axis slice, nothing special about it

            double vrr = 0.0, vr = 0.0;
            for (int s = -2; s <= 2; ++s) {
                double f = v(r + s * h, y);
                vrr += kD2[s + 2] * f;
                vr += kD1[s + 2] * f;
            }
            vrr /= h * h;
            vr /= h;

            double lap_y = 0.0;
            for (int d = 0; d < ell; ++d) {
                double acc = 0.0;
                yshift = y;
                for (int s = -2; s <= 2; ++s) {
                    yshift[d] = y[d] + s * h;
                    acc += kD2[s + 2] * v(r, yshift);
                }
                yshift[d] = y[d];
                lap_y += acc / (h * h);
            }

            const double center = v(r, y);
            const double residual = vrr + (n - 1.0) / r * vr + lap_y - lambda_j / (r * r) * center;
            worst = std::max(worst, std::abs(residual));
        }
    }
    return worst;
}

double separated_ode_residual(const ModeProfile& profile, const ConeSpec& cone, int ell,
                              const AnnulusGrid& grid) {
    auto eval = [&profile](double r, std::span<const double> y) { return profile.eval(r, y); };
    return separated_ode_residual(eval, cone, profile.j, ell, grid);
}

double mode_projection_residual(const std::function<double(double, std::span<const double>)>& v,
                                double gamma, double beta, int ell, const AnnulusGrid& grid) {
    if (ell < 1 || ell > 2)
        throw std::invalid_argument("mode_projection_residual: ell must be 1 or 2");
    if (grid.r_lo - 2.0 * grid.h <= 0.0)
        throw std::invalid_argument("mode_projection_residual: stencil touches the axis r = 0");

    auto g = [&](double r, std::span<const double> y) { return std::pow(r, -gamma) * v(r, y); };

    const double h = grid.h;
    const int nr = static_cast<int>(std::floor((grid.r_hi - grid.r_lo) / h)) + 1;
    const int ny = std::max(1, static_cast<int>(std::floor(2.0 * grid.y_half / h)) + 1);

    std::vector<double> y(static_cast<size_t>(ell), 0.0);
    std::vector<double> yshift(static_cast<size_t>(ell), 0.0);
    double worst = 0.0;
    for (int ir = 0; ir < nr; ++ir) {
        const double r = grid.r_lo + ir * h;
        for (int iy = 0; iy < ny; ++iy) {
            y[0] = ny == 1 ? 0.0 : -grid.y_half + iy * (2.0 * grid.y_half / (ny - 1));
            if (ell == 2) y[1] = 0.25 * y[0];

            double grr = 0.0, gr = 0.0;
            for (int s = -2; s <= 2; ++s) {
                double f = g(r + s * h, y);
                grr += kD2[s + 2] * f;
                gr += kD1[s + 2] * f;
            }
            grr /= h * h;
            gr /= h;
            double lap_y = 0.0;
            for (int d = 0; d < ell; ++d) {
                double acc = 0.0;
                yshift = y;
                for (int s = -2; s <= 2; ++s) {
                    yshift[d] = y[d] + s * h;
                    acc += kD2[s + 2] * g(r, yshift);
                }
                yshift[d] = y[d];
                lap_y += acc / (h * h);
            }
            const double residual = grr + (1.0 + beta) / r * gr + lap_y;
            worst = std::max(worst, std::abs(residual));
        }
    }
    return worst;
}

RYPoly mode_projection_exact(const JacobiFieldSpec& spec, int j) {
    RYPoly sum(static_cast<unsigned>(spec.ell));
    for (const auto& mode : spec.modes) {
        if (mode.j != j || mode.poly.is_zero()) continue;
        sum = sum + mode.poly.as_rypoly() * mode.amplitude;
    }
    return sum;
}

AvintProfile avint_profile(const JacobiFieldSpec& spec, std::span<const double> radii,
                           int quad_points) {
    for (size_t k = 0; k < radii.size(); ++k) {
        if (radii[k] <= 0.0 || (k > 0 && radii[k] <= radii[k - 1]))
            throw std::invalid_argument("avint_profile: radii must be positive ascending");
    }
    auto lines = spectrum_through(spec.cone, spec.modes);
    const double beta1 = lines.at(0).beta;
    const int ell = spec.ell;

    // analytic homogeneities: mode (j,q) contributes
    //   amp^2 N_{j,q}^2 / (ell+2+beta_j+2q) at exponent 2q + beta_j - beta_1
    std::map<double, double> by_exponent;
    for (const auto& mode : spec.modes) {
        const SpectralLine& line = lines.at(mode.j - 1);
        validate_mode(mode, line, ell);
        if (mode.poly.is_zero()) continue;
        HalfSphereMeasure measure = HalfSphereMeasure::create(ell, line.beta, 48);
        const double nq_sq = sphere_inner_product(mode.poly, mode.poly, measure).value;
        const double amp = to_double(mode.amplitude);
        const double denom = ell + 2.0 + line.beta + 2.0 * mode.q;
        const double exponent = 2.0 * mode.q + line.beta - beta1;
        bool merged = false;
        for (auto& [e, b] : by_exponent) {
            if (std::abs(e - exponent) <= 1e-12) {
                b += amp * amp * nq_sq / denom;
                merged = true;
                break;
            }
        }
        if (!merged) by_exponent[exponent] += amp * amp * nq_sq / denom;
    }
    std::vector<double> exps, coeffs;
    for (const auto& [e, b] : by_exponent) {
        exps.push_back(0.5 * e);  // value(rho) = sum b rho^{2 q_i}
        coeffs.push_back(b);
    }

    AvintProfile out;
    out.radii.assign(radii.begin(), radii.end());
    out.growth = GrowthProfile::analytic(exps, coeffs);

    // per-level quadrature of v_j^2 over the cone ball; distinct j are
    // additive by orthonormality of the angular factors
    auto profiles = synthesize(spec);
    for (double rho : radii) {
        double analytic = 0.0;
        for (size_t i = 0; i < exps.size(); ++i)
            analytic += coeffs[i] * std::pow(rho, 2.0 * exps[i]);
        double quadrature = 0.0;
        for (const auto& profile : profiles) {
            Cubature ball = half_ball_rule(ell, profile.beta, rho, quad_points);
            double level = 0.0;
            for (size_t k = 0; k < ball.points.size(); ++k) {
                const auto& pt = ball.points[k];
                double poly_val = 0.0;
                for (const auto& [amp, p] : profile.parts)
                    poly_val += amp * p.eval(pt[0], std::span<const double>(pt).subspan(1));
                level += ball.weights[k] * poly_val * poly_val;
            }
            quadrature += level;
        }
        quadrature *= std::pow(rho, -(ell + 2.0 + beta1));
        out.analytic.push_back(analytic);
        out.quadrature.push_back(quadrature);
    }
    return out;
}

std::string avint_csv(const AvintProfile& profile) {
    std::ostringstream os;
    os << "rho,avint_analytic,avint_quadrature,relative_gap\n";
    char buf[128];
    for (size_t k = 0; k < profile.radii.size(); ++k) {
        double a = profile.analytic[k], q = profile.quadrature[k];
        double gap = std::abs(a - q) / (std::max(std::abs(a), std::abs(q)) + 1e-300);
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", profile.radii[k], a, q, gap);
        os << buf;
    }
    return os.str();
}

}  // namespace conekit
