#include "conekit/half_ball.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace conekit {

HalfBallGrid HalfBallGrid::make(int ell, double beta, int n_rho, int n_theta, double rho_max) {
    if (ell < 1) throw std::invalid_argument("HalfBallGrid: ell must be >= 1");
    if (beta <= 0.0) throw std::invalid_argument("HalfBallGrid: beta must be > 0");
    if (n_rho < 8 || n_theta < 8)
        throw std::invalid_argument("HalfBallGrid: need at least 8 cells per dimension");
    if (rho_max <= 0.0) throw std::invalid_argument("HalfBallGrid: rho_max must be > 0");
    HalfBallGrid g;
    g.ell = ell;
    g.beta = beta;
    g.n_rho = n_rho;
    g.n_theta = n_theta;
    g.rho_max = rho_max;
    g.theta_lo = ell == 1 ? -0.5 * std::numbers::pi : 0.0;
    g.theta_hi = 0.5 * std::numbers::pi;
    return g;
}

double HalfBallGrid::angular_weight(double theta) const {
    double w = std::pow(std::cos(theta), 1.0 + beta);
    if (ell >= 2) w *= std::pow(std::sin(theta), ell - 1.0);
    return w;
}

namespace {

// 4-point Lagrange interpolation along one axis; `base` is the first of the
// four stencil indices, t the coordinate in units of the spacing measured
// from that node.
double cubic4(const double* v, double t) {
    double w0 = -(t - 1.0) * (t - 2.0) * (t - 3.0) / 6.0;
    double w1 = t * (t - 2.0) * (t - 3.0) / 2.0;
    double w2 = -t * (t - 1.0) * (t - 3.0) / 2.0;
    double w3 = t * (t - 1.0) * (t - 2.0) / 6.0;
    return w0 * v[0] + w1 * v[1] + w2 * v[2] + w3 * v[3];
}

int stencil_base(double x, int n) {
    // x in cell-center index coordinates (value k means center k)
    int base = static_cast<int>(std::floor(x)) - 1;
    if (base < 0) base = 0;
    if (base > n - 4) base = n - 4;
    return base;
}

}  // namespace

double HalfBallField::value_polar(double rho, double theta) const {
    const auto& g = grid;
    if (g.n_rho < 4 || g.n_theta < 4)
        throw std::logic_error("HalfBallField: grid too small to interpolate");
    const double xi = rho / g.drho() - 0.5;
    const double xj = (theta - g.theta_lo) / g.dtheta() - 0.5;
    const int bi = stencil_base(xi, g.n_rho);
    const int bj = stencil_base(xj, g.n_theta);
    double rows[4];
    for (int a = 0; a < 4; ++a) {
        double col[4];
        for (int b = 0; b < 4; ++b) col[b] = values[g.index(bi + a, bj + b)];
        rows[a] = cubic4(col, xj - bj);
    }
    return cubic4(rows, xi - bi);
}

double HalfBallField::value_rz(double r, double z) const {
    if (analytic) return analytic(r, z);
    const double rho = std::hypot(r, z);
    const double theta = std::atan2(z, r);
    return value_polar(rho, theta);
}

std::string field_to_text(const HalfBallField& field) {
    const auto& g = field.grid;
    std::ostringstream os;
    char buf[96];
    os << "# conekit half-ball field\n";
    os << "ell " << g.ell << "\n";
    std::snprintf(buf, sizeof buf, "beta %.17g\n", g.beta);
    os << buf;
    os << "coords polar\n";
    os << "n_rho " << g.n_rho << "\n";
    os << "n_theta " << g.n_theta << "\n";
    std::snprintf(buf, sizeof buf, "rho_max %.17g\n", g.rho_max);
    os << buf;
    std::snprintf(buf, sizeof buf, "theta_lo %.17g\n", g.theta_lo);
    os << buf;
    std::snprintf(buf, sizeof buf, "theta_hi %.17g\n", g.theta_hi);
    os << buf;
    os << "data rho theta value\n";
    for (int i = 0; i < g.n_rho; ++i) {
        for (int j = 0; j < g.n_theta; ++j) {
            std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g\n", g.rho_center(i),
                          g.theta_center(j), field.values[g.index(i, j)]);
            os << buf;
        }
    }
    return os.str();
}

HalfBallField field_from_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    HalfBallGrid g;
    bool have_dims = false;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "ell") ls >> g.ell;
        else if (key == "beta") ls >> g.beta;
        else if (key == "coords") { std::string c; ls >> c; if (c != "polar") throw std::invalid_argument("field_from_text: unknown coordinate system"); }
        else if (key == "n_rho") ls >> g.n_rho;
        else if (key == "n_theta") ls >> g.n_theta;
        else if (key == "rho_max") ls >> g.rho_max;
        else if (key == "theta_lo") ls >> g.theta_lo;
        else if (key == "theta_hi") ls >> g.theta_hi;
        else if (key == "data") { have_dims = true; break; }
        else throw std::invalid_argument("field_from_text: unknown header key '" + key + "'");
    }
    if (!have_dims || g.n_rho <= 0 || g.n_theta <= 0)
        throw std::invalid_argument("field_from_text: incomplete header");

    HalfBallField field;
    field.grid = g;
    field.values.assign(static_cast<size_t>(g.n_rho) * g.n_theta, 0.0);
    size_t count = 0;
    double rho, theta, value;
    while (is >> rho >> theta >> value) {
        if (count >= field.values.size())
            throw std::invalid_argument("field_from_text: too many data rows");
        field.values[count++] = value;
    }
    if (count != field.values.size())
        throw std::invalid_argument("field_from_text: missing data rows");
    return field;
}

}  // namespace conekit
