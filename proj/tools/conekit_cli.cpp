// Batch front-end for the conekit library: spectra, beta-harmonic
// polynomials, Dirichlet solves, mode expansions, Jacobi-field profiles and
// growth analyses, with CSV/JSON reports suitable for external plotting.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "conekit/beta_poly.hpp"
#include "conekit/beta_poly_io.hpp"
#include "conekit/cone.hpp"
#include "conekit/cylinder.hpp"
#include "conekit/expansion.hpp"
#include "conekit/growth.hpp"
#include "conekit/half_ball.hpp"
#include "conekit/hardy.hpp"
#include "conekit/solver.hpp"
#include "conekit/spectrum.hpp"

using nlohmann::json;
using namespace conekit;

namespace {

struct GlobalOpts {
    std::string format = "json";
    std::string out_path;
    unsigned long seed = 0;
};

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// "1.0" rather than "1" for human-facing one-liners
std::string fmt_short(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", v);
    std::string s = buf;
    if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
        s.find("inf") == std::string::npos && s.find("nan") == std::string::npos)
        s += ".0";
    return s;
}

void emit(const GlobalOpts& g, const std::string& payload) {
    if (g.out_path.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream os(g.out_path, std::ios::binary);
    if (!os) throw std::invalid_argument("cannot open output path '" + g.out_path + "'");
    os << payload;
}

std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::invalid_argument("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    if (out.empty()) throw std::invalid_argument("empty list '" + text + "'");
    return out;
}

MultiPoly default_leading_layer(int ell, int degree) {
    Monomial m(static_cast<size_t>(ell), 0u);
    m[ell == 1 ? 0 : 0] = static_cast<unsigned>(degree);
    return MultiPoly::monomial(m, 1);
}

MultiPoly leading_layer_from_json(int ell, const std::string& text) {
    json terms = json::parse(text);
    if (!terms.is_array()) throw std::invalid_argument("--p0 must be a JSON array of terms");
    MultiPoly p(static_cast<unsigned>(ell));
    for (const auto& t : terms) {
        Monomial m = t.at("multi_index").get<Monomial>();
        BigInt num(t.at("numerator").get<std::string>());
        BigInt den(t.at("denominator").get<std::string>());
        p.add_term(m, Rational(num, den));
    }
    return p;
}

json spectral_line_json(const SpectralLine& line) {
    json row;
    row["j"] = line.index;
    row["lambda"] = format_rational(line.lambda);
    row["multiplicity"] = line.multiplicity;
    if (line.gamma_minus_exact) row["gamma_minus"] = format_rational(*line.gamma_minus_exact);
    else row["gamma_minus"] = line.gamma_minus;
    if (line.gamma_plus_exact) row["gamma_plus"] = format_rational(*line.gamma_plus_exact);
    else row["gamma_plus"] = line.gamma_plus;
    if (line.beta_exact) row["beta"] = format_rational(*line.beta_exact);
    else row["beta"] = line.beta;
    row["k"] = line.labels.front().first;
    row["m"] = line.labels.front().second;
    return row;
}

// --- subcommand payload builders -------------------------------------------

std::string run_spectrum(const GlobalOpts& g, int p, int q, int count) {
    auto lines = spectrum(build_cone(p, q), count);
    if (g.format == "csv") return spectrum_csv(lines);
    json arr = json::array();
    for (const auto& line : lines) arr.push_back(spectral_line_json(line));
    return arr.dump(2);
}

std::string run_poly(const GlobalOpts& g, int ell, const std::string& beta_text, int degree,
                     const std::string& p0_text) {
    Rational beta = parse_rational(beta_text);
    MultiPoly p0 = p0_text.empty() ? default_leading_layer(ell, degree)
                                   : leading_layer_from_json(ell, p0_text);
    if (p0.degree() != degree && !p0.is_zero())
        throw std::invalid_argument("--p0 degree does not match --degree");
    BetaPolynomial h = BetaPolynomial::generate(beta, static_cast<unsigned>(ell), p0);
    if (g.format == "json") return beta_polynomial_to_json(h);
    std::ostringstream os;
    os << "layer,r_power,y_exponents,numerator,denominator\n";
    for (size_t j = 0; j < h.layer_count(); ++j) {
        for (const auto& [m, c] : h.layer(j).terms()) {
            os << j << ',' << 2 * j << ',';
            for (size_t i = 0; i < m.size(); ++i) os << (i ? " " : "") << m[i];
            os << ',' << boost::multiprecision::numerator(c).str() << ','
               << boost::multiprecision::denominator(c).str() << '\n';
        }
    }
    return os.str();
}

std::string run_solve(const GlobalOpts&, int ell, double beta, int grid,
                      const std::string& trace_path, double cg_tol) {
    std::string text = slurp(trace_path);
    SolveOptions opt;
    opt.n_rho = grid;
    opt.n_theta = grid;
    opt.cg_tolerance = cg_tol;
    SolveStats stats;
    HalfBallField field;

    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        // boundary data given as a serialized polynomial
        BetaPolynomial h = beta_polynomial_from_json(text);
        if (static_cast<int>(h.ell()) != ell)
            throw std::invalid_argument("trace polynomial ell does not match --ell");
        RYPoly p = h.as_rypoly();
        auto trace = [p, ell](double theta) {
            std::vector<double> y(static_cast<size_t>(ell), 0.0);
            y[0] = std::sin(theta);
            return p.eval(std::cos(theta), y);
        };
        field = solve_dirichlet(beta, ell, trace, opt, &stats);
    } else {
        std::istringstream is(text);
        std::vector<double> thetas, values;
        double a, b;
        while (is >> a >> b) {
            thetas.push_back(a);
            values.push_back(b);
        }
        field = solve_dirichlet(beta, ell, thetas, values, opt, &stats);
    }
    return field_to_text(field);
}

std::string run_expand(const GlobalOpts& g, const std::string& field_path, double rho,
                       int max_degree) {
    HalfBallField field = field_from_text(slurp(field_path));
    ModeExpansion e = expand_on_sphere(field, rho, max_degree);
    if (g.format == "csv") {
        std::ostringstream os;
        os << "q,coeff,n_q\n";
        for (const auto& mc : e.coefficients)
            os << mc.q << ',' << fmt17(mc.coeff) << ',' << fmt17(mc.n_q) << '\n';
        return os.str();
    }
    json root;
    root["ell"] = e.ell;
    root["beta"] = e.beta;
    root["rho"] = e.rho;
    root["max_degree"] = e.max_degree;
    root["trace_l2_sq"] = e.trace_l2_sq;
    root["residual_sq"] = e.residual_sq;
    json arr = json::array();
    for (const auto& mc : e.coefficients) {
        json row;
        row["q"] = mc.q;
        row["coeff"] = mc.coeff;
        row["n_q"] = mc.n_q;
        arr.push_back(row);
    }
    root["modes"] = arr;
    return root.dump(2);
}

std::vector<JacobiMode> parse_modes(const ConeSpec& cone, int ell, const std::string& text) {
    auto lines = spectrum(cone, 16);
    std::vector<JacobiMode> modes;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto c1 = item.find(':');
        auto c2 = item.find(':', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw std::invalid_argument("mode '" + item + "' is not j:q:amplitude");
        JacobiMode m;
        m.j = std::stoi(item.substr(0, c1));
        m.q = std::stoi(item.substr(c1 + 1, c2 - c1 - 1));
        m.amplitude = parse_rational(item.substr(c2 + 1));
        if (m.j < 1 || m.j > static_cast<int>(lines.size()))
            throw std::invalid_argument("mode index j out of range");
        const auto& line = lines[m.j - 1];
        Rational beta_j = line.beta_exact ? *line.beta_exact : rational_from_double(line.beta);
        m.poly = BetaPolynomial::generate(beta_j, static_cast<unsigned>(ell),
                                          default_leading_layer(ell, m.q));
        modes.push_back(std::move(m));
    }
    if (modes.empty()) throw std::invalid_argument("empty mode list");
    return modes;
}

std::string run_modes(const GlobalOpts& g, int p, int q, int ell, const std::string& modes_text,
                      const std::string& radii_text) {
    JacobiFieldSpec spec;
    spec.cone = build_cone(p, q);
    spec.ell = ell;
    spec.modes = parse_modes(spec.cone, ell, modes_text);
    auto radii = parse_double_list(radii_text);
    AvintProfile profile = avint_profile(spec, radii);
    if (g.format == "csv") return avint_csv(profile);
    json root;
    root["exponents"] = profile.growth.exponents();
    root["coeff_sq"] = profile.growth.coeff_sq();
    json rows = json::array();
    for (size_t k = 0; k < profile.radii.size(); ++k) {
        json row;
        row["rho"] = profile.radii[k];
        row["avint_analytic"] = profile.analytic[k];
        row["avint_quadrature"] = profile.quadrature[k];
        rows.push_back(row);
    }
    root["profile"] = rows;
    return root.dump(2);
}

std::string run_growth_ladder(const GlobalOpts& g, int p, int q, int count, int max_q) {
    auto lines = spectrum(build_cone(p, q), count);
    auto ladder = exponent_ladder(lines, max_q);
    if (g.format == "csv") {
        std::ostringstream os;
        os << "i,q_i\n";
        for (size_t i = 0; i < ladder.size(); ++i) os << i + 1 << ',' << fmt17(ladder[i]) << '\n';
        return os.str();
    }
    json root;
    root["ladder"] = ladder;
    return root.dump(2);
}

GrowthProfile profile_from_flags(const std::string& exps_text, const std::string& coeffs_text) {
    return GrowthProfile::analytic(parse_double_list(exps_text), parse_double_list(coeffs_text));
}

std::string run_growth_convexity(const GlobalOpts& g, const std::string& exps_text,
                                 const std::string& coeffs_text, double t_lo, double t_hi,
                                 int n_t, double step, int draws) {
    std::ostringstream csv;
    csv << "draw,min_second_difference\n";
    double global_min = std::numeric_limits<double>::infinity();
    json rows = json::array();
    if (draws <= 0) {
        auto profile = profile_from_flags(exps_text, coeffs_text);
        double m = psi_convexity(profile, t_lo, t_hi, n_t, step);
        global_min = m;
        csv << 0 << ',' << fmt17(m) << '\n';
        rows.push_back({{"draw", 0}, {"min_second_difference", m}});
    } else {
        auto exps = parse_double_list(exps_text);
        std::mt19937 rng(g.seed);
        std::uniform_real_distribution<double> coeff(0.0, 1.0);
        for (int d = 0; d < draws; ++d) {
            std::vector<double> b(exps.size());
            double total = 0.0;
            for (auto& x : b) {
                x = coeff(rng);
                total += x;
            }
            if (total == 0.0) b[0] = 1.0;
            auto profile = GrowthProfile::analytic(exps, b);
            double m = psi_convexity(profile, t_lo, t_hi, n_t, step);
            global_min = std::min(global_min, m);
            csv << d + 1 << ',' << fmt17(m) << '\n';
            rows.push_back({{"draw", d + 1}, {"min_second_difference", m}});
        }
    }
    if (g.format == "csv") return csv.str();
    json root;
    root["min_second_difference"] = global_min;
    root["rows"] = rows;
    return root.dump(2);
}

std::string run_growth_dichotomy(const GlobalOpts& g, const std::string& exps_text,
                                 const std::string& coeffs_text, double Q,
                                 const std::string& rho_text) {
    auto profile = profile_from_flags(exps_text, coeffs_text);
    auto radii = parse_double_list(rho_text);
    std::ostringstream csv;
    csv << "Q,rho,ratio_small,ratio_large,premise,conclusion\n";
    json rows = json::array();
    for (double rho : radii) {
        auto res = doubling_dichotomy(profile, Q, rho);
        csv << fmt17(Q) << ',' << fmt17(rho) << ',' << fmt17(res.ratio_small) << ','
            << fmt17(res.ratio_large) << ',' << (res.premise ? 1 : 0) << ','
            << (res.conclusion ? 1 : 0) << '\n';
        rows.push_back({{"Q", Q},
                        {"rho", rho},
                        {"ratio_small", res.ratio_small},
                        {"ratio_large", res.ratio_large},
                        {"premise", res.premise},
                        {"conclusion", res.conclusion}});
    }
    if (g.format == "csv") return csv.str();
    return json{{"rows", rows}}.dump(2);
}

std::string run_growth_gap(const GlobalOpts& g, double alpha, double r_min, double r_max,
                           int n_r, std::string* summary) {
    std::vector<double> radii;
    for (int k = 0; k < n_r; ++k)
        radii.push_back(r_min * std::pow(r_max / r_min, n_r == 1 ? 0.0 : double(k) / (n_r - 1)));
    auto report = liouville_gap(alpha, radii);
    *summary = report.feasible_beyond_one
                   ? "feasible radii beyond R=1 found (unexpected)"
                   : "infeasible for R>1, margin " + fmt_short(report.margin);
    if (g.format == "csv") {
        std::ostringstream os;
        os << "R,lower,upper,feasible\n";
        for (const auto& row : report.rows)
            os << fmt17(row.R) << ',' << fmt17(row.lower) << ',' << fmt17(row.upper) << ','
               << (row.feasible ? 1 : 0) << '\n';
        return os.str();
    }
    json rows = json::array();
    for (const auto& row : report.rows)
        rows.push_back({{"R", row.R},
                        {"lower", row.lower},
                        {"upper", row.upper},
                        {"feasible", row.feasible}});
    return json{{"alpha", alpha},
                {"margin", report.margin},
                {"infeasible_beyond_one", !report.feasible_beyond_one},
                {"rows", rows}}
        .dump(2);
}

std::string run_growth_fit(const GlobalOpts& g, const std::string& samples_path,
                           const std::string& exps_text) {
    std::string text = slurp(samples_path);
    std::istringstream is(text);
    std::string line;
    std::vector<std::pair<double, double>> samples;
    int value_col = 1;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line.find_first_not_of("0123456789+-.eE, \t\r") != std::string::npos) {
            // header row; prefer the quadrature column of a modes export
            std::stringstream hs(line);
            std::string col;
            int idx = 0;
            while (std::getline(hs, col, ',')) {
                if (col == "avint_quadrature") value_col = idx;
                ++idx;
            }
            continue;
        }
        std::stringstream ls(line);
        std::string cell;
        std::vector<double> cells;
        while (std::getline(ls, cell, ',')) cells.push_back(std::stod(cell));
        if (cells.size() < 2) continue;
        samples.emplace_back(cells[0], cells[static_cast<size_t>(value_col) < cells.size()
                                                 ? value_col
                                                 : 1]);
    }
    auto exps = parse_double_list(exps_text);
    auto fit = fit_exponents(samples, exps);
    if (g.format == "csv") {
        std::ostringstream os;
        os << "q_i,b_i_sq\n";
        for (size_t i = 0; i < exps.size(); ++i)
            os << fmt17(exps[i]) << ',' << fmt17(fit.coeff_sq[i]) << '\n';
        os << "# residual," << fmt17(fit.residual) << '\n';
        os << "# well_conditioned," << (fit.well_conditioned ? 1 : 0) << '\n';
        return os.str();
    }
    return json{{"exponents", exps},
                {"coeff_sq", fit.coeff_sq},
                {"residual", fit.residual},
                {"well_conditioned", fit.well_conditioned}}
        .dump(2);
}

std::string run_report(const GlobalOpts&) {
    // canned battery over the Simons cone; always JSON
    json root;
    auto cone = build_cone(3, 3);
    auto lines = spectrum(cone, 6);
    json spec_rows = json::array();
    for (const auto& line : lines) spec_rows.push_back(spectral_line_json(line));
    root["spectrum_3_3"] = spec_rows;
    auto stab = strict_stability(cone);
    root["stability"] = {{"classification", stab.classification == StabilityClass::strictly_stable
                                                ? "strictly_stable"
                                                : stab.classification == StabilityClass::borderline
                                                      ? "borderline"
                                                      : "unstable"},
                         {"margin", format_rational(stab.margin)}};
    json polys = json::array();
    for (int q = 0; q <= 4; ++q) {
        auto h = BetaPolynomial::generate(1, 1, default_leading_layer(1, q));
        polys.push_back(json::parse(beta_polynomial_to_json(h)));
    }
    root["beta1_polynomials"] = polys;
    auto ladder = exponent_ladder(lines, 4);
    root["exponent_ladder"] = ladder;
    json gaps = json::array();
    for (int k = 1; k <= 9; ++k) {
        double alpha = k / 10.0;
        auto rep = liouville_gap(alpha, std::vector<double>{1.5, 2.0, 4.0, 16.0});
        gaps.push_back({{"alpha", alpha},
                        {"margin", rep.margin},
                        {"infeasible_beyond_one", !rep.feasible_beyond_one}});
    }
    root["liouville_gap"] = gaps;
    return root.dump(2);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral toolkit for strictly stable minimal cones and beta-harmonic analysis"};
    app.require_subcommand(1);
    app.set_config("--config", "", "flat key=value configuration file");

    GlobalOpts g;
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", g.out_path, "write output to this path instead of stdout");
    app.add_option("--seed", g.seed, "seed for randomized sweeps");

    // spectrum
    auto* sc_spectrum = app.add_subcommand("spectrum", "eigen-levels of the cross-section");
    sc_spectrum->fallthrough();
    int p = 3, q = 3, count = 5;
    sc_spectrum->add_option("--p", p, "first sphere dimension")->required();
    sc_spectrum->add_option("--q", q, "second sphere dimension")->required();
    sc_spectrum->add_option("--count", count, "number of eigen-levels");

    // poly
    auto* sc_poly = app.add_subcommand("poly", "generate a beta-harmonic polynomial");
    sc_poly->fallthrough();
    int ell = 1, degree = 2;
    std::string beta_text = "1", p0_text;
    sc_poly->add_option("--ell", ell, "number of y variables")->required();
    sc_poly->add_option("--beta", beta_text, "weight exponent (rational)")->required();
    sc_poly->add_option("--degree", degree, "homogeneity degree")->required();
    sc_poly->add_option("--p0", p0_text, "leading layer as a JSON term array");

    // solve
    auto* sc_solve = app.add_subcommand("solve", "weighted Dirichlet solve on the half-ball");
    sc_solve->fallthrough();
    int s_ell = 1, s_grid = 64;
    double s_beta = 1.0, s_cg_tol = 1e-12;
    std::string trace_path;
    sc_solve->add_option("--ell", s_ell)->required();
    sc_solve->add_option("--beta", s_beta)->required();
    sc_solve->add_option("--grid", s_grid, "cells per dimension");
    sc_solve->add_option("--trace", trace_path, "boundary trace file (samples or poly JSON)")
        ->required();
    sc_solve->add_option("--cg-tol", s_cg_tol, "conjugate gradient relative residual target");

    // expand
    auto* sc_expand = app.add_subcommand("expand", "mode expansion of a stored field");
    sc_expand->fallthrough();
    std::string field_path;
    double rho = 0.5;
    int max_degree = 6;
    sc_expand->add_option("--field", field_path)->required();
    sc_expand->add_option("--rho", rho)->required();
    sc_expand->add_option("--max-degree", max_degree)->required();

    // modes
    auto* sc_modes = app.add_subcommand("modes", "Jacobi-field profile on the cylinder");
    sc_modes->fallthrough();
    int m_p = 3, m_q = 3, m_ell = 1;
    std::string modes_text, radii_text;
    sc_modes->add_option("--p", m_p)->required();
    sc_modes->add_option("--q", m_q)->required();
    sc_modes->add_option("--ell", m_ell)->required();
    sc_modes->add_option("--modes", modes_text, "j:q:amplitude, comma separated")->required();
    sc_modes->add_option("--radii", radii_text, "comma separated radii")->required();

    // growth family
    auto* sc_growth = app.add_subcommand("growth", "frequency-profile analyses");
    sc_growth->require_subcommand(1);
    sc_growth->fallthrough();

    auto* sc_ladder = sc_growth->add_subcommand("ladder", "merged homogeneity exponents");
    sc_ladder->fallthrough();
    int l_p = 3, l_q = 3, l_count = 3, l_max_q = 4;
    sc_ladder->add_option("--p", l_p)->required();
    sc_ladder->add_option("--q", l_q)->required();
    sc_ladder->add_option("--count", l_count);
    sc_ladder->add_option("--max-q", l_max_q);

    auto* sc_convex = sc_growth->add_subcommand("convexity", "second differences of psi");
    sc_convex->fallthrough();
    std::string c_exps, c_coeffs;
    double t_lo = -2.0, t_hi = 2.0, t_step = 0.3;
    int n_t = 21, c_draws = 0;
    sc_convex->add_option("--exponents", c_exps)->required();
    sc_convex->add_option("--coeffs", c_coeffs);
    sc_convex->add_option("--t-lo", t_lo);
    sc_convex->add_option("--t-hi", t_hi);
    sc_convex->add_option("--nt", n_t);
    sc_convex->add_option("--step", t_step);
    sc_convex->add_option("--draws", c_draws, "random coefficient draws (uses --seed)");

    auto* sc_dich = sc_growth->add_subcommand("dichotomy", "doubling implication sweep");
    sc_dich->fallthrough();
    std::string d_exps, d_coeffs, d_rhos = "1";
    double d_Q = 2.0;
    sc_dich->add_option("--exponents", d_exps)->required();
    sc_dich->add_option("--coeffs", d_coeffs)->required();
    sc_dich->add_option("--Q", d_Q)->required();
    sc_dich->add_option("--rho", d_rhos, "comma separated scales");

    auto* sc_gap = sc_growth->add_subcommand("gap", "Liouville exponent-gap feasibility");
    sc_gap->fallthrough();
    double g_alpha = 0.5, g_rmin = 1.25, g_rmax = 64.0;
    int g_nr = 8;
    sc_gap->add_option("--alpha", g_alpha)->required();
    sc_gap->add_option("--r-min", g_rmin);
    sc_gap->add_option("--r-max", g_rmax);
    sc_gap->add_option("--nr", g_nr);

    auto* sc_fit = sc_growth->add_subcommand("fit", "nonnegative exponent fit of samples");
    sc_fit->fallthrough();
    std::string f_samples, f_exps;
    sc_fit->add_option("--samples", f_samples, "csv of (rho, value) or a modes export")
        ->required();
    sc_fit->add_option("--exponents", f_exps)->required();

    // report
    auto* sc_report = app.add_subcommand("report", "canned battery over the Simons cone");
    sc_report->fallthrough();
    bool report_all = false;
    sc_report->add_flag("--all", report_all, "run every section");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    }

    try {
        if (*sc_spectrum) emit(g, run_spectrum(g, p, q, count));
        else if (*sc_poly) emit(g, run_poly(g, ell, beta_text, degree, p0_text));
        else if (*sc_solve) emit(g, run_solve(g, s_ell, s_beta, s_grid, trace_path, s_cg_tol));
        else if (*sc_expand) emit(g, run_expand(g, field_path, rho, max_degree));
        else if (*sc_modes) emit(g, run_modes(g, m_p, m_q, m_ell, modes_text, radii_text));
        else if (*sc_growth) {
            if (*sc_ladder) emit(g, run_growth_ladder(g, l_p, l_q, l_count, l_max_q));
            else if (*sc_convex)
                emit(g, run_growth_convexity(g, c_exps, c_coeffs, t_lo, t_hi, n_t, t_step,
                                             c_draws));
            else if (*sc_dich) emit(g, run_growth_dichotomy(g, d_exps, d_coeffs, d_Q, d_rhos));
            else if (*sc_gap) {
                std::string summary;
                std::string payload = run_growth_gap(g, g_alpha, g_rmin, g_rmax, g_nr, &summary);
                std::cout << summary << '\n';
                if (!g.out_path.empty()) emit(g, payload);
            } else if (*sc_fit) emit(g, run_growth_fit(g, f_samples, f_exps));
        } else if (*sc_report) {
            emit(g, run_report(g));
        }
    } catch (const SolverFailure& e) {
        std::cerr << "numerical error: " << e.what() << std::endl;
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    } catch (const std::runtime_error& e) {
        std::cerr << "numerical error: " << e.what() << std::endl;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    }
    return 0;
}
