#include "conekit/solver.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "conekit/quadrature.hpp"

namespace conekit {

namespace {

// Face conductances of the discrete energy
//   E(u) = sum_faces K_f (u_a - u_b)^2 + sum_j K_b[j] (u_{N-1,j} - phi_j)^2.
struct Stencil {
    HalfBallGrid grid;
    std::vector<double> k_radial;    // (n_rho-1) x n_theta interior radial faces
    std::vector<double> k_angular;   // n_rho x (n_theta-1) interior angular faces
    std::vector<double> k_boundary;  // n_theta faces on rho = rho_max
    std::vector<double> diag;

    size_t rf(int i, int j) const { return static_cast<size_t>(i) * grid.n_theta + j; }
    size_t af(int i, int j) const { return static_cast<size_t>(i) * (grid.n_theta - 1) + j; }
};

Stencil build_stencil(const HalfBallGrid& g) {
    Stencil st;
    st.grid = g;
    const int nr = g.n_rho, nt = g.n_theta;
    const double h_rho = g.drho(), h_theta = g.dtheta();
    const double a = g.radial_exponent();

    // exact integrals of the angular factor over each theta cell
    QuadRule gl8 = gauss_legendre(8);
    std::vector<double> g_cell(nt);
    for (int j = 0; j < nt; ++j) {
        double lo = g.theta_lo + j * h_theta;
        g_cell[j] = integrate(gl8, lo, lo + h_theta, [&](double t) { return g.angular_weight(t); });
    }
    // angular conductance radial moment: regular fields have u_theta
    // proportional to rho near the tip, so the face flux is modeled as
    // u_theta(rho, theta_f) = (rho/rho_i) u_theta(rho_i, theta_f), giving
    // the moment int rho^{a-1} drho / rho_i.  Away from the tip this agrees
    // with the naive int rho^{a-2} drho to O(h^2); in the first cells it is
    // what keeps the scheme second order pointwise.
    std::vector<double> p_cell(nr);
    for (int i = 0; i < nr; ++i) {
        double lo = i * h_rho, hi = lo + h_rho;
        double rho_i = (i + 0.5) * h_rho;
        p_cell[i] = (std::pow(hi, a) - std::pow(lo, a)) / (a * rho_i);
    }

    st.k_radial.assign(static_cast<size_t>(nr - 1) * nt, 0.0);
    for (int i = 0; i + 1 < nr; ++i) {
        double rho_f = (i + 1) * h_rho;
        double coeff = std::pow(rho_f, a) / h_rho;
        for (int j = 0; j < nt; ++j) st.k_radial[st.rf(i, j)] = coeff * g_cell[j];
    }
    st.k_angular.assign(static_cast<size_t>(nr) * (nt - 1), 0.0);
    for (int j = 0; j + 1 < nt; ++j) {
        double theta_f = g.theta_lo + (j + 1) * h_theta;
        double gw = g.angular_weight(theta_f) / h_theta;
        for (int i = 0; i < nr; ++i) st.k_angular[st.af(i, j)] = gw * p_cell[i];
    }
    st.k_boundary.assign(nt, 0.0);
    for (int j = 0; j < nt; ++j)
        st.k_boundary[j] = std::pow(g.rho_max, a) * g_cell[j] / (0.5 * h_rho);

    st.diag.assign(static_cast<size_t>(nr) * nt, 0.0);
    for (int i = 0; i + 1 < nr; ++i)
        for (int j = 0; j < nt; ++j) {
            double k = st.k_radial[st.rf(i, j)];
            st.diag[g.index(i, j)] += k;
            st.diag[g.index(i + 1, j)] += k;
        }
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j + 1 < nt; ++j) {
            double k = st.k_angular[st.af(i, j)];
            st.diag[g.index(i, j)] += k;
            st.diag[g.index(i, j + 1)] += k;
        }
    for (int j = 0; j < nt; ++j) st.diag[g.index(nr - 1, j)] += st.k_boundary[j];
    return st;
}

void apply_operator(const Stencil& st, const std::vector<double>& u, std::vector<double>& out) {
    const auto& g = st.grid;
    const int nr = g.n_rho, nt = g.n_theta;
    std::fill(out.begin(), out.end(), 0.0);
    for (int i = 0; i + 1 < nr; ++i)
        for (int j = 0; j < nt; ++j) {
            double k = st.k_radial[st.rf(i, j)];
            double d = u[g.index(i, j)] - u[g.index(i + 1, j)];
            out[g.index(i, j)] += k * d;
            out[g.index(i + 1, j)] -= k * d;
        }
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j + 1 < nt; ++j) {
            double k = st.k_angular[st.af(i, j)];
            double d = u[g.index(i, j)] - u[g.index(i, j + 1)];
            out[g.index(i, j)] += k * d;
            out[g.index(i, j + 1)] -= k * d;
        }
    for (int j = 0; j < nt; ++j)
        out[g.index(nr - 1, j)] += st.k_boundary[j] * u[g.index(nr - 1, j)];
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

HalfBallField solve_dirichlet(double beta, int ell,
                              const std::function<double(double)>& boundary_trace,
                              const SolveOptions& options, SolveStats* stats) {
    if (!boundary_trace) throw std::invalid_argument("solve_dirichlet: missing boundary trace");
    HalfBallGrid grid = HalfBallGrid::make(ell, beta, options.n_rho, options.n_theta);
    Stencil st = build_stencil(grid);
    const size_t n = st.diag.size();

    std::vector<double> b(n, 0.0), phi(grid.n_theta);
    for (int j = 0; j < grid.n_theta; ++j) {
        phi[j] = boundary_trace(grid.theta_center(j));
        b[grid.index(grid.n_rho - 1, j)] = st.k_boundary[j] * phi[j];
    }

    // Jacobi-preconditioned CG
    std::vector<double> u(n, 0.0), r = b, z(n), p(n), Ap(n);
    const double b_norm = std::sqrt(dot(b, b));
    const int cap = std::max(64, static_cast<int>(options.iteration_cap_factor * std::sqrt(double(n))));
    int iters = 0;
    double rel = 1.0;
    if (b_norm == 0.0) {
        rel = 0.0;
    } else {
        for (size_t i = 0; i < n; ++i) z[i] = r[i] / st.diag[i];
        p = z;
        double rz = dot(r, z);
        bool converged = false;
        for (iters = 0; iters < cap && !converged; ) {
            apply_operator(st, p, Ap);
            double alpha = rz / dot(p, Ap);
            for (size_t i = 0; i < n; ++i) {
                u[i] += alpha * p[i];
                r[i] -= alpha * Ap[i];
            }
            ++iters;
            rel = std::sqrt(dot(r, r)) / b_norm;
            if (rel <= options.cg_tolerance) {
                // the recurrence residual drifts from b - A u; only the true
                // residual decides convergence
                apply_operator(st, u, Ap);
                for (size_t i = 0; i < n; ++i) r[i] = b[i] - Ap[i];
                rel = std::sqrt(dot(r, r)) / b_norm;
                if (rel <= options.cg_tolerance) {
                    converged = true;
                    break;
                }
                // restart from the true residual
                for (size_t i = 0; i < n; ++i) z[i] = r[i] / st.diag[i];
                p = z;
                rz = dot(r, z);
                continue;
            }
            for (size_t i = 0; i < n; ++i) z[i] = r[i] / st.diag[i];
            double rz_next = dot(r, z);
            double omega = rz_next / rz;
            rz = rz_next;
            for (size_t i = 0; i < n; ++i) p[i] = z[i] + omega * p[i];
        }
        if (!converged)
            throw SolverFailure("solve_dirichlet: conjugate gradient did not reach tolerance " +
                                    std::to_string(options.cg_tolerance) + " after " +
                                    std::to_string(iters) + " iterations",
                                iters);
    }

    HalfBallField field;
    field.grid = grid;
    field.values = std::move(u);

    if (stats) {
        stats->iterations = iters;
        stats->cg_relative_residual = rel;
        // weak-form defect against each interior hat, normalized row by row
        apply_operator(st, field.values, Ap);
        double umax = 0.0;
        for (double v : field.values) umax = std::max(umax, std::abs(v));
        double worst = 0.0;
        for (size_t i = 0; i < n; ++i) {
            double defect = std::abs(b[i] - Ap[i]);
            double scale = st.diag[i] * umax + std::abs(b[i]) + 1e-300;
            worst = std::max(worst, defect / scale);
        }
        stats->weak_form_residual = worst;
        stats->discrete_energy = dirichlet_energy(field, boundary_trace);
    }
    return field;
}

HalfBallField solve_dirichlet(double beta, int ell, std::span<const double> theta_samples,
                              std::span<const double> trace_samples,
                              const SolveOptions& options, SolveStats* stats) {
    if (theta_samples.size() != trace_samples.size() || theta_samples.size() < 4)
        throw std::invalid_argument("solve_dirichlet: need >= 4 matching trace samples");
    std::vector<double> ts(theta_samples.begin(), theta_samples.end());
    std::vector<double> vs(trace_samples.begin(), trace_samples.end());
    for (size_t k = 1; k < ts.size(); ++k)
        if (ts[k] <= ts[k - 1])
            throw std::invalid_argument("solve_dirichlet: trace samples must be sorted in theta");
    auto interp = [ts = std::move(ts), vs = std::move(vs)](double theta) {
        // local 4-point Lagrange interpolation on the sample sequence
        size_t hi = std::lower_bound(ts.begin(), ts.end(), theta) - ts.begin();
        size_t base = hi > 1 ? hi - 2 : 0;
        base = std::min(base, ts.size() - 4);
        double num = 0.0;
        for (size_t a = 0; a < 4; ++a) {
            double w = vs[base + a];
            for (size_t c = 0; c < 4; ++c) {
                if (c == a) continue;
                w *= (theta - ts[base + c]) / (ts[base + a] - ts[base + c]);
            }
            num += w;
        }
        return num;
    };
    return solve_dirichlet(beta, ell, interp, options, stats);
}

double dirichlet_energy(const HalfBallField& field,
                        const std::function<double(double)>& boundary_trace) {
    Stencil st = build_stencil(field.grid);
    const auto& g = field.grid;
    const auto& u = field.values;
    double e = 0.0;
    for (int i = 0; i + 1 < g.n_rho; ++i)
        for (int j = 0; j < g.n_theta; ++j) {
            double d = u[g.index(i, j)] - u[g.index(i + 1, j)];
            e += st.k_radial[st.rf(i, j)] * d * d;
        }
    for (int i = 0; i < g.n_rho; ++i)
        for (int j = 0; j + 1 < g.n_theta; ++j) {
            double d = u[g.index(i, j)] - u[g.index(i, j + 1)];
            e += st.k_angular[st.af(i, j)] * d * d;
        }
    for (int j = 0; j < g.n_theta; ++j) {
        double d = u[g.index(g.n_rho - 1, j)] - boundary_trace(g.theta_center(j));
        e += st.k_boundary[j] * d * d;
    }
    return e;
}

AxisRegularity axis_regularity_check(const HalfBallField& field) {
    const auto& g = field.grid;
    AxisRegularity out;
    double umax = 1e-300;
    for (double v : field.values) umax = std::max(umax, std::abs(v));

    // probe along the theta levels nearest the degenerate axis cos(theta) = 0
    std::vector<int> ends{+1};
    if (g.ell == 1) ends.push_back(-1);  // for ell = 1 both theta ends hit r = 0

    for (int sign : ends) {
        auto theta_of = [&](int steps_in) {
            int j = sign > 0 ? g.n_theta - 1 - steps_in : steps_in;
            return g.theta_center(j);
        };
        for (double y0 : {0.35, 0.5, 0.65, 0.8}) {
            double th[3] = {theta_of(0), theta_of(1), theta_of(2)};
            double rho[3], r[3], v[3] = {0.0, 0.0, 0.0};
            bool usable = true;
            for (int k = 0; k < 3; ++k) {
                rho[k] = y0 / std::abs(std::sin(th[k]));
                if (rho[k] >= g.rho_max - 2.5 * g.drho() || rho[k] <= 2.5 * g.drho())
                    usable = false;
                r[k] = rho[k] * std::cos(th[k]);
            }
            if (!usable) continue;
            for (int k = 0; k < 3; ++k) v[k] = field.value_polar(rho[k], th[k]);
            out.max_dr = std::max(out.max_dr, std::abs((v[1] - v[0]) / (r[1] - r[0])));
            // quadratic fit u = a + b r + c r^2; b is the odd defect
            double d01 = (v[1] - v[0]) / (r[1] - r[0]);
            double d12 = (v[2] - v[1]) / (r[2] - r[1]);
            double c = (d12 - d01) / (r[2] - r[0]);
            double bcoef = d01 - c * (r[0] + r[1]);
            out.even_defect = std::max(out.even_defect, std::abs(bcoef) / umax);
        }
    }
    return out;
}

}  // namespace conekit
