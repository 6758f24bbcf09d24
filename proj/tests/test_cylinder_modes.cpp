#include <doctest.h>

#include <cmath>
#include <random>

#include "conekit/cylinder.hpp"
#include "test_support.hpp"

using namespace conekit;
using namespace conekit::testing;

namespace {

MultiPoly y_power(int q) { return MultiPoly::monomial(Monomial{static_cast<unsigned>(q)}, 1); }

JacobiFieldSpec simons_spec(std::vector<JacobiMode> modes) {
    JacobiFieldSpec spec;
    spec.cone = build_cone(3, 3);
    spec.ell = 1;
    spec.modes = std::move(modes);
    return spec;
}

JacobiMode make_mode(int j, int q, Rational amp, const Rational& beta_j) {
    JacobiMode m;
    m.j = j;
    m.q = q;
    m.amplitude = amp;
    m.poly = BetaPolynomial::generate(beta_j, 1, y_power(q));
    return m;
}

}  // namespace

TEST_CASE("synthesize: lowest Simons mode is r^-2") {
    auto spec = simons_spec({make_mode(1, 0, 1, 1)});
    auto profiles = synthesize(spec);
    REQUIRE(profiles.size() == 1);
    CHECK(profiles[0].gamma == doctest::Approx(-2.0));
    CHECK(profiles[0].beta == doctest::Approx(1.0));
    for (double r : {0.1, 0.5, 1.0, 2.0}) {
        double y = 0.3;
        CHECK(profiles[0].eval(r, std::span<const double>(&y, 1)) ==
              doctest::Approx(std::pow(r, -2.0)).epsilon(1e-14));
    }

    // empty mode list: nothing to evaluate
    CHECK(synthesize(simons_spec({})).empty());

    // (j=1, q=2): r^{-2} (y^2 - r^2/3)
    auto spec2 = simons_spec({make_mode(1, 2, 1, 1)});
    auto p2 = synthesize(spec2);
    REQUIRE(p2.size() == 1);
    double r = 0.7, y = -0.4;
    double expected = std::pow(r, -2.0) * (y * y - r * r / 3.0);
    CHECK(p2[0].eval(r, std::span<const double>(&y, 1)) == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("synthesize: validation") {
    // polynomial built with the wrong beta is rejected
    JacobiMode bad;
    bad.j = 1;
    bad.q = 2;
    bad.amplitude = 1;
    bad.poly = BetaPolynomial::generate(2, 1, y_power(2));  // beta_1 = 1, not 2
    CHECK_THROWS_AS(synthesize(simons_spec({bad})), std::invalid_argument);

    // unstable cone has no gamma^+ branch to synthesize
    JacobiFieldSpec unstable;
    unstable.cone = build_cone(1, 1);
    unstable.ell = 1;
    unstable.modes = {make_mode(1, 0, 1, 1)};
    CHECK_THROWS_AS(synthesize(unstable), std::invalid_argument);
}

TEST_CASE("separated ODE: exact modes have tiny residual") {
    ConeSpec simons = build_cone(3, 3);

    // v = r^-2, lambda_1 = -6, n = 7: plug-in gives
    // r^{-6} (r^6 (r^-2)')' = -6 r^-4 = lambda_1 r^-2 v exactly
    auto v1 = [](double r, std::span<const double>) { return std::pow(r, -2.0); };
    AnnulusGrid grid;
    grid.r_lo = 1.0;
    grid.r_hi = 2.0;
    grid.y_half = 0.05;
    grid.h = 1e-3;
    CHECK(separated_ode_residual(v1, simons, 1, 1, grid) < 1e-8);

    // the zero field
    auto vz = [](double, std::span<const double>) { return 0.0; };
    CHECK(separated_ode_residual(vz, simons, 1, 1, grid) == 0.0);

    // v_2 = r^{gamma_2} h_1(y) = y (gamma_2^+ = 0, lambda_2 = 0)
    auto v2 = [](double, std::span<const double> y) { return y[0]; };
    CHECK(separated_ode_residual(v2, simons, 2, 1, grid) < 1e-8);

    // grids touching the axis are rejected
    AnnulusGrid bad = grid;
    bad.r_lo = 1e-3;
    CHECK_THROWS_AS(separated_ode_residual(v1, simons, 1, 1, bad), std::invalid_argument);

    // negative control: a non-characteristic power leaves the residual of
    // the exponent quadratic, r^{g-2}(g^2 + (n-2)g - lambda_1), which is
    // far from zero
    auto v_wrong = [](double r, std::span<const double>) { return std::pow(r, -1.0); };
    double res = separated_ode_residual(v_wrong, simons, 1, 1, grid);
    // g = -1, n = 7: g^2 + 5g + 6 = 2, largest at r = 1: |2 r^{-3}| = 2
    CHECK(res == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("separated ODE: synthesized modes converge under refinement") {
    auto spec = simons_spec({make_mode(1, 2, 1, 1)});
    auto profiles = synthesize(spec);
    REQUIRE(profiles.size() == 1);

    ConeSpec simons = build_cone(3, 3);
    double residuals[3];
    double hs[3] = {4e-2, 2e-2, 1e-2};
    for (int k = 0; k < 3; ++k) {
        AnnulusGrid grid;
        grid.r_lo = 0.5;
        grid.r_hi = 1.5;
        grid.y_half = 0.3;
        grid.h = hs[k];
        residuals[k] = separated_ode_residual(profiles[0], simons, 1, grid);
    }
    double order1 = std::log2(residuals[0] / residuals[1]);
    double order2 = std::log2(residuals[1] / residuals[2]);
    INFO("residuals ", residuals[0], " ", residuals[1], " ", residuals[2]);
    CHECK(order1 > 1.8);
    CHECK(order2 > 1.8);
}

TEST_CASE("mode projection: symbolic and finite-difference routes") {
    // v_j = r^{gamma_j} * 1 gives h == 1
    auto spec0 = simons_spec({make_mode(1, 0, 1, 1)});
    RYPoly h0 = mode_projection_exact(spec0, 1);
    CHECK(apply_beta_laplacian(h0, 1).is_zero());

    // v_j = r^{gamma_1} h_2: exactly beta_1-harmonic
    auto spec2 = simons_spec({make_mode(1, 2, Rational(5, 7), 1)});
    RYPoly h2 = mode_projection_exact(spec2, 1);
    CHECK_FALSE(h2.is_zero());
    CHECK(apply_beta_laplacian(h2, 1).is_zero());

    // two-term mode through the numeric route
    auto spec_mix = simons_spec({make_mode(1, 0, Rational(3, 2), 1), make_mode(1, 2, 2, 1)});
    auto profiles = synthesize(spec_mix);
    REQUIRE(profiles.size() == 1);
    AnnulusGrid grid;
    grid.r_lo = 0.5;
    grid.r_hi = 1.5;
    grid.y_half = 0.2;
    grid.h = 1e-3;
    auto eval = [&](double r, std::span<const double> y) { return profiles[0].eval(r, y); };
    CHECK(mode_projection_residual(eval, profiles[0].gamma, profiles[0].beta, 1, grid) < 1e-7);

    // second eigen-level: gamma_2 = 0, beta_2 = 5
    auto spec_j2 = simons_spec({make_mode(2, 1, 1, 5)});
    auto p2 = synthesize(spec_j2);
    auto eval2 = [&](double r, std::span<const double> y) { return p2[0].eval(r, y); };
    CHECK(mode_projection_residual(eval2, p2[0].gamma, p2[0].beta, 1, grid) < 1e-7);
}

TEST_CASE("avint profile: homogeneity bookkeeping") {
    std::vector<double> radii{0.25, 0.5, 1.0, 2.0};

    // single (j=1, q=0) mode: constant in rho
    auto flat = avint_profile(simons_spec({make_mode(1, 0, 1, 1)}), radii);
    REQUIRE(flat.analytic.size() == 4);
    for (size_t k = 1; k < flat.analytic.size(); ++k)
        CHECK(flat.analytic[k] == doctest::Approx(flat.analytic[0]).epsilon(1e-12));
    for (size_t k = 0; k < radii.size(); ++k)
        CHECK(flat.quadrature[k] == doctest::Approx(flat.analytic[k]).epsilon(1e-6));
    REQUIRE(flat.growth.exponents().size() == 1);
    CHECK(flat.growth.exponents()[0] == doctest::Approx(0.0));

    // zero field
    auto zero = avint_profile(simons_spec({}), radii);
    CHECK(zero.growth.is_zero());
    for (double v : zero.quadrature) CHECK(v == 0.0);

    // (1,0) + (1,1): b1^2 + b2^2 rho^2, strictly increasing
    auto two = avint_profile(simons_spec({make_mode(1, 0, 1, 1), make_mode(1, 1, 2, 1)}), radii);
    REQUIRE(two.growth.exponents().size() == 2);
    CHECK(two.growth.exponents()[0] == doctest::Approx(0.0));
    CHECK(two.growth.exponents()[1] == doctest::Approx(1.0));
    for (size_t k = 1; k < radii.size(); ++k) CHECK(two.analytic[k] > two.analytic[k - 1]);
    for (size_t k = 0; k < radii.size(); ++k)
        CHECK(two.quadrature[k] == doctest::Approx(two.analytic[k]).epsilon(1e-6));

    // modes at distinct eigen-levels add (angular orthonormality)
    auto only1 = avint_profile(simons_spec({make_mode(1, 0, 1, 1)}), radii);
    auto only2 = avint_profile(simons_spec({make_mode(2, 0, 1, 5)}), radii);
    auto both = avint_profile(simons_spec({make_mode(1, 0, 1, 1), make_mode(2, 0, 1, 5)}), radii);
    for (size_t k = 0; k < radii.size(); ++k) {
        CHECK(both.analytic[k] ==
              doctest::Approx(only1.analytic[k] + only2.analytic[k]).epsilon(1e-12));
        CHECK(both.quadrature[k] ==
              doctest::Approx(only1.quadrature[k] + only2.quadrature[k]).epsilon(1e-9));
    }

    // the csv export carries four columns
    auto csv = avint_csv(both);
    CHECK(csv.rfind("rho,avint_analytic,avint_quadrature,relative_gap\n", 0) == 0);

    CHECK_THROWS_AS(avint_profile(simons_spec({}), std::vector<double>{1.0, 0.5}),
                    std::invalid_argument);
}

TEST_CASE("avint profile: nondecreasing for random coefficient draws") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> amp(0, 5);
    std::vector<double> radii{0.3, 0.6, 1.2, 2.4, 4.8};
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<JacobiMode> modes;
        for (int q = 0; q <= 2; ++q) {
            int a = amp(rng);
            if (a) modes.push_back(make_mode(1, q, a, 1));
        }
        int a2 = amp(rng);
        if (a2) modes.push_back(make_mode(2, 0, a2, 5));
        if (modes.empty()) continue;
        auto profile = avint_profile(simons_spec(std::move(modes)), radii);
        for (size_t k = 1; k < radii.size(); ++k)
            CHECK(profile.analytic[k] >= profile.analytic[k - 1] * (1.0 - 1e-12));
    }
}
