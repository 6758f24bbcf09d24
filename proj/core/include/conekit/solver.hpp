#pragma once

#include <functional>
#include <span>
#include <stdexcept>

#include "conekit/half_ball.hpp"

namespace conekit {

struct SolveOptions {
    int n_rho = 64;
    int n_theta = 64;
    double cg_tolerance = 1e-12;   // relative two-norm residual target
    int iteration_cap_factor = 50; // cap = factor * sqrt(#unknowns)
};

struct SolveStats {
    int iterations = 0;
    double cg_relative_residual = 0.0;
    // max over interior hat functions of the normalized weak-form defect
    double weak_form_residual = 0.0;
    double discrete_energy = 0.0;
};

struct SolverFailure : std::runtime_error {
    SolverFailure(const std::string& what, int iters)
        : std::runtime_error(what), iterations(iters) {}
    int iterations;
};

// Minimizes int (u_rho^2 + rho^{-2} u_theta^2) rho^{ell+1+beta} g(theta)
// over the cell-centered grid among fields with the given Dirichlet trace at
// rho = 1 (conservative-form flux discretization, faces only; the degenerate
// lines carry no unknowns).  The SPD system is solved by Jacobi-preconditioned
// conjugate gradients.  Throws SolverFailure on non-convergence.
HalfBallField solve_dirichlet(double beta, int ell,
                              const std::function<double(double)>& boundary_trace,
                              const SolveOptions& options = {}, SolveStats* stats = nullptr);

// Sampled boundary data (theta_k, value_k); piecewise-cubic interpolation
// between nodes.  Samples must cover the theta range of the grid.
HalfBallField solve_dirichlet(double beta, int ell, std::span<const double> theta_samples,
                              std::span<const double> trace_samples,
                              const SolveOptions& options = {}, SolveStats* stats = nullptr);

// Discrete energy of an arbitrary field with the given trace; the minimizer
// returned by solve_dirichlet has the smallest value among all such fields.
double dirichlet_energy(const HalfBallField& field,
                        const std::function<double(double)>& boundary_trace);

struct AxisRegularity {
    double max_dr = 0.0;       // one-sided estimate of |d_r u(0+, y)|
    double even_defect = 0.0;  // odd-in-r component from a 3-point fit, relative
};

// Probes the field along lines y = const approaching the degenerate axis
// r = 0; both outputs vanish at O(grid) for fields that extend evenly.
AxisRegularity axis_regularity_check(const HalfBallField& field);

}  // namespace conekit
