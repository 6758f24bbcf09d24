#include <doctest.h>

#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "conekit/cone.hpp"
#include "conekit/hardy.hpp"
#include "conekit/spectrum.hpp"
#include "test_support.hpp"

using namespace conekit;
using namespace conekit::testing;

namespace {

// independent |A_Sigma|^2 route: principal curvatures of S^p(a) x S^q(b)
// inside S^n give p (b/a)^2 + q (a/b)^2
Rational second_ff_oracle(const ConeSpec& c) {
    return Rational(c.p) * (c.b_sq / c.a_sq) + Rational(c.q) * (c.a_sq / c.b_sq);
}

}  // namespace

TEST_CASE("build_cone: Simons cone and relatives") {
    ConeSpec simons = build_cone(3, 3);
    CHECK(simons.n == 7);
    CHECK(simons.a_sq == Rational(1, 2));
    CHECK(simons.b_sq == Rational(1, 2));
    CHECK(simons.second_ff_sq == 6);
    CHECK(second_ff_oracle(simons) == simons.second_ff_sq);

    ConeSpec low = build_cone(1, 1);
    CHECK(low.n == 3);
    CHECK(low.second_ff_sq == 2);
    CHECK(second_ff_oracle(low) == 2);

    ConeSpec big = build_cone(4, 4);
    CHECK(big.n == 9);
    CHECK(big.second_ff_sq == 8);
    CHECK(second_ff_oracle(big) == 8);

    // asymmetric cones satisfy the same identity
    for (auto [p, q] : {std::pair{2, 4}, {1, 5}, {3, 7}}) {
        ConeSpec c = build_cone(p, q);
        CHECK(second_ff_oracle(c) == c.second_ff_sq);
        CHECK(c.a_sq + c.b_sq == 1);
    }

    CHECK_THROWS_AS(build_cone(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(build_cone(3, 0), std::invalid_argument);
}

TEST_CASE("spectrum: Simons cone anchor values") {
    ConeSpec simons = build_cone(3, 3);
    auto lines = spectrum(simons, 6);
    REQUIRE(lines.size() == 6);

    // lambda_1 = -6 with constant eigenfunction, beta_1 = 1 exactly
    CHECK(lines[0].lambda == -6);
    CHECK(lines[0].multiplicity == 1);
    CHECK(lines[0].labels == std::vector<std::pair<int, int>>{{0, 0}});
    REQUIRE(lines[0].beta_exact.has_value());
    CHECK(*lines[0].beta_exact == 1);
    REQUIRE(lines[0].gamma_plus_exact.has_value());
    CHECK(*lines[0].gamma_plus_exact == -2);
    CHECK(*lines[0].gamma_minus_exact == -3);

    // lambda_2 = 0 from (1,0) and (0,1); dim H_1(S^3) = 4 each
    CHECK(lines[1].lambda == 0);
    CHECK(lines[1].multiplicity == 8);
    CHECK(lines[1].labels == std::vector<std::pair<int, int>>{{0, 1}, {1, 0}});
    REQUIRE(lines[1].beta_exact.has_value());
    CHECK(*lines[1].beta_exact == 5);

    // lambda_3 = 6 from (1,1): beta = 2 sqrt(6.25+6) = 7
    CHECK(lines[2].lambda == 6);
    REQUIRE(lines[2].beta_exact.has_value());
    CHECK(*lines[2].beta_exact == 7);
    CHECK(lines[2].multiplicity == 16);
}

TEST_CASE("spectrum: exponent identities hold exactly") {
    for (auto [p, q] : {std::pair{3, 3}, {2, 4}, {2, 5}, {4, 4}}) {
        ConeSpec cone = build_cone(p, q);
        auto lines = spectrum(cone, 8);
        for (const auto& line : lines) {
            if (std::isnan(line.beta)) continue;
            // gamma^+ + gamma^- = -(n-2), gamma^+ - gamma^- = beta,
            // gamma^+ gamma^- = -lambda
            CHECK(line.gamma_plus + line.gamma_minus ==
                  doctest::Approx(-(cone.n - 2.0)).epsilon(1e-13));
            CHECK(line.gamma_plus - line.gamma_minus == doctest::Approx(line.beta).epsilon(1e-13));
            CHECK(line.gamma_plus * line.gamma_minus ==
                  doctest::Approx(-to_double(line.lambda)).epsilon(1e-12));
            // the quadratic of the characteristic exponents
            double res = line.gamma_plus * line.gamma_plus + (cone.n - 2.0) * line.gamma_plus -
                         to_double(line.lambda);
            CHECK(std::abs(res) < 1e-10);
        }
        // nondecreasing eigenvalues, strictly after the first
        CHECK(lines[0].lambda < lines[1].lambda);
        for (size_t i = 1; i < lines.size(); ++i) CHECK(lines[i - 1].lambda < lines[i].lambda);
    }
}

TEST_CASE("spectrum: matches a brute-force enumeration") {
    // independent route: enumerate lambda(k,m) directly over a generous box
    // and compare levels and multiplicities
    ConeSpec cone = build_cone(2, 4);
    std::map<Rational, BigInt> brute;
    for (int k = 0; k <= 12; ++k) {
        for (int m = 0; m <= 12; ++m) {
            Rational lam = Rational(k) * (k + cone.p - 1) / cone.a_sq +
                           Rational(m) * (m + cone.q - 1) / cone.b_sq - (cone.n - 1);
            brute[lam] += sphere_harmonic_dim(cone.p, k) * sphere_harmonic_dim(cone.q, m);
        }
    }
    auto lines = spectrum(cone, 6);
    auto it = brute.begin();
    for (const auto& line : lines) {
        CHECK(line.lambda == it->first);
        CHECK(line.multiplicity == static_cast<int>(it->second));
        ++it;
    }
}

TEST_CASE("sphere_harmonic_dim closed forms") {
    for (int k = 1; k <= 6; ++k) {
        CHECK(sphere_harmonic_dim(1, k) == 2);
        CHECK(sphere_harmonic_dim(2, k) == 2 * k + 1);
        CHECK(sphere_harmonic_dim(3, k) == BigInt(k + 1) * (k + 1));
    }
    CHECK(sphere_harmonic_dim(5, 0) == 1);
}

TEST_CASE("characteristic exponent ordering for strictly stable cones") {
    for (auto [p, q] : {std::pair{3, 3}, {2, 4}, {4, 4}, {2, 5}}) {
        ConeSpec cone = build_cone(p, q);
        REQUIRE(strict_stability(cone).classification == StabilityClass::strictly_stable);
        auto lines = spectrum(cone, 8);
        const double mid = -0.5 * (cone.n - 2);
        // gamma_1^- < -(n-2)/2 < gamma_1^+ < 0, monotone in j on both branches
        CHECK(lines[0].gamma_minus < mid);
        CHECK(mid < lines[0].gamma_plus);
        CHECK(lines[0].gamma_plus < 0.0);
        for (size_t j = 1; j < lines.size(); ++j) {
            CHECK(lines[j].gamma_plus > lines[j - 1].gamma_plus);
            CHECK(lines[j].gamma_minus < lines[j - 1].gamma_minus);
        }
    }
}

TEST_CASE("spectrum: prefix property and lambda_1 = -(n-1)") {
    for (auto [p, q] : {std::pair{3, 3}, {1, 6}, {5, 2}}) {
        ConeSpec cone = build_cone(p, q);
        auto short_list = spectrum(cone, 3);
        auto long_list = spectrum(cone, 11);
        CHECK(short_list[0].lambda == -(cone.n - 1));
        CHECK(short_list[0].multiplicity == 1);
        for (size_t i = 0; i < short_list.size(); ++i) {
            CHECK(short_list[i].lambda == long_list[i].lambda);
            CHECK(short_list[i].multiplicity == long_list[i].multiplicity);
            CHECK(short_list[i].labels == long_list[i].labels);
        }
    }
}

TEST_CASE("spectrum csv export") {
    auto lines = spectrum(build_cone(3, 3), 2);
    std::string csv = spectrum_csv(lines);
    std::istringstream is(csv);
    std::string header, row1, row2;
    std::getline(is, header);
    std::getline(is, row1);
    std::getline(is, row2);
    CHECK(header == "j,lambda,multiplicity,gamma_minus,gamma_plus,beta,k,m");
    CHECK(row1 == "1,-6,1,-3,-2,1,0,0");
    CHECK(row2 == "2,0,8,-5,0,5,0,1");
}

TEST_CASE("strict_stability classification") {
    auto simons = strict_stability(build_cone(3, 3));
    CHECK(simons.classification == StabilityClass::strictly_stable);
    CHECK(simons.margin == Rational(1, 4));

    auto low = strict_stability(build_cone(1, 1));
    CHECK(low.classification == StabilityClass::unstable);
    CHECK(low.margin == Rational(-7, 4));

    auto asym = strict_stability(build_cone(2, 4));
    CHECK(asym.classification == StabilityClass::strictly_stable);
    CHECK(asym.margin == Rational(1, 4));

    // beta_1 > 0 exactly when strictly stable
    for (auto [p, q] : {std::pair{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}, {2, 4}, {5, 5}}) {
        ConeSpec cone = build_cone(p, q);
        auto line1 = spectrum(cone, 1)[0];
        bool stable = strict_stability(cone).classification == StabilityClass::strictly_stable;
        CHECK((line1.beta > 0.0) == stable);
    }
}

TEST_CASE("hardy_check: frozen example values") {
    // f = r(1-r) on [0,1], n=7, p=0: exact lhs = 1/252, rhs = 11/126,
    // ratio = 1/22
    RadialTestFunction f;
    f.support_lo = 0.0;
    f.support_hi = 1.0;
    f.value = [](double r) { return r * (1.0 - r); };
    f.deriv = [](double r) { return 1.0 - 2.0 * r; };
    auto res = hardy_check(7, 0.0, f);
    CHECK(res.lhs == doctest::Approx(1.0 / 252.0).epsilon(1e-12));
    CHECK(res.rhs == doctest::Approx(11.0 / 126.0).epsilon(1e-12));
    CHECK(res.ratio == doctest::Approx(1.0 / 22.0).epsilon(1e-12));
    CHECK(res.bound == doctest::Approx(0.16));
    CHECK(res.ratio <= res.bound);

    // zero function
    RadialTestFunction zero = f;
    zero.value = [](double) { return 0.0; };
    zero.deriv = [](double) { return 0.0; };
    auto zres = hardy_check(7, 0.0, zero);
    CHECK(zres.lhs == 0.0);
    CHECK(zres.rhs == 0.0);
    CHECK(zres.ratio == 0.0);

    // f = sin(pi (r-1)) on [1,2], n=7, p=4 against a Simpson oracle
    RadialTestFunction g;
    g.support_lo = 1.0;
    g.support_hi = 2.0;
    g.value = [](double r) { return std::sin(M_PI * (r - 1.0)); };
    g.deriv = [](double r) { return M_PI * std::cos(M_PI * (r - 1.0)); };
    auto gres = hardy_check(7, 4.0, g);
    double lhs_oracle = simpson(1.0, 2.0, 4000, [&](double r) {
        return std::pow(r, 0.0) * g.value(r) * g.value(r);  // n-3-p = 0
    });
    double rhs_oracle = simpson(1.0, 2.0, 4000, [&](double r) {
        return std::pow(r, 2.0) * g.deriv(r) * g.deriv(r);  // n-1-p = 2
    });
    CHECK(gres.lhs == doctest::Approx(lhs_oracle).epsilon(1e-9));
    CHECK(gres.rhs == doctest::Approx(rhs_oracle).epsilon(1e-9));
    CHECK(gres.ratio <= 4.0);

    CHECK_THROWS_AS(hardy_check(7, 5.0, f), std::invalid_argument);
    CHECK_THROWS_AS(hardy_check(7, 6.0, f), std::invalid_argument);
}

TEST_CASE("hardy_check: randomized family stays below the sharp bound") {
    std::mt19937 rng(20210905);
    for (int trial = 0; trial < 100; ++trial) {
        RadialTestFunction f = random_bump(rng);
        int n = 4 + static_cast<int>(rng() % 6);      // n in [4, 9]
        double p = (n - 2 - 1) * (rng() % 100) / 100.0;  // p in [0, n-3)
        auto res = hardy_check(n, p, f);
        CHECK(res.ratio <= res.bound * (1.0 + 1e-9));
    }
}

TEST_CASE("cone_stability_inequality") {
    ConeSpec simons = build_cone(3, 3);
    ConeSpec low = build_cone(1, 1);

    RadialTestFunction zeta;
    zeta.support_lo = 0.0;
    zeta.support_hi = 2.0;
    zeta.value = [](double r) { return r * (2.0 - r); };
    zeta.deriv = [](double r) { return 2.0 - 2.0 * r; };

    CHECK(cone_stability_inequality(simons, zeta, 0.25));
    CHECK(cone_stability_inequality(simons, zeta, 0.0));

    // multi-scale witness: violates the unstable cone at lambda = 1/4 but
    // not the strictly stable one
    RadialTestFunction witness = log_witness(3, 10.0);
    CHECK_FALSE(cone_stability_inequality(low, witness, 0.25));
    RadialTestFunction witness7 = log_witness(7, 10.0);
    CHECK(cone_stability_inequality(simons, witness7, 0.25));

    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        RadialTestFunction f = random_bump(rng);
        CHECK(cone_stability_inequality(simons, f, 0.25));
        CHECK(cone_stability_inequality(simons, f, 0.0));
    }
}
