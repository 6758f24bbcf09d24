#include <benchmark/benchmark.h>

#include <cmath>
#include <span>

#include "conekit/beta_poly.hpp"
#include "conekit/cone.hpp"
#include "conekit/growth.hpp"
#include "conekit/solver.hpp"
#include "conekit/spectrum.hpp"

using namespace conekit;

namespace {

MultiPoly y_power(int q) { return MultiPoly::monomial(Monomial{static_cast<unsigned>(q)}, 1); }

void BM_Spectrum(benchmark::State& state) {
    ConeSpec cone = build_cone(3, 3);
    for (auto _ : state) {
        auto lines = spectrum(cone, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(lines);
    }
}
BENCHMARK(BM_Spectrum)->Arg(8)->Arg(32);

void BM_GeneratePolynomial(benchmark::State& state) {
    for (auto _ : state) {
        auto h = BetaPolynomial::generate(1, 1, y_power(static_cast<int>(state.range(0))));
        benchmark::DoNotOptimize(h);
    }
}
BENCHMARK(BM_GeneratePolynomial)->Arg(4)->Arg(10);

void BM_SphereInnerProduct(benchmark::State& state) {
    HalfSphereMeasure measure = HalfSphereMeasure::create(1, 1.0, 48);
    auto h6 = BetaPolynomial::generate(1, 1, y_power(6));
    auto h8 = BetaPolynomial::generate(1, 1, y_power(8));
    for (auto _ : state) {
        auto ip = sphere_inner_product(h6, h8, measure);
        benchmark::DoNotOptimize(ip);
    }
}
BENCHMARK(BM_SphereInnerProduct);

void BM_SolveDirichlet(benchmark::State& state) {
    auto h2 = BetaPolynomial::generate(1, 1, y_power(2)).as_rypoly();
    auto trace = [&h2](double theta) {
        double y = std::sin(theta);
        return h2.eval(std::cos(theta), std::span<const double>(&y, 1));
    };
    SolveOptions opt;
    opt.n_rho = static_cast<int>(state.range(0));
    opt.n_theta = opt.n_rho;
    for (auto _ : state) {
        auto field = solve_dirichlet(1.0, 1, trace, opt);
        benchmark::DoNotOptimize(field);
    }
}
BENCHMARK(BM_SolveDirichlet)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_PsiConvexity(benchmark::State& state) {
    auto lines = spectrum(build_cone(3, 3), 3);
    auto ladder = exponent_ladder(lines, 4);
    std::vector<double> coeffs(ladder.size(), 0.5);
    auto profile = GrowthProfile::analytic(ladder, coeffs);
    for (auto _ : state) {
        double m = psi_convexity(profile, -2.0, 2.0, 41, 0.25);
        benchmark::DoNotOptimize(m);
    }
}
BENCHMARK(BM_PsiConvexity);

}  // namespace

BENCHMARK_MAIN();
