#pragma once

#include <functional>
#include <vector>

#include "hsusy/types.hpp"

namespace hsusy::oracle {

using Potential = std::function<double(double)>;

/// Uniform half-line discretization with Dirichlet ends. The closed forms
/// this solver verifies all decay exponentially, so truncation error is
/// dominated by the O(h^2) discretization error at the default resolution.
struct Grid {
  double r_min;
  double r_max;
  int n_points;

  double h() const { return (r_max - r_min) / (n_points - 1); }
  std::vector<double> points() const;
};

Grid make_grid(double r_min, double r_max, int n_points);

/// Default interior resolution; HULTHEN_SUSY_GRID_POINTS overrides.
int default_grid_points();

struct Eigenpair {
  double energy;
  std::vector<double> psi;  // on grid.points(), trapezoid-normalized
};

/// All eigenvalues of -c d^2/dr^2 + V below energy_ceiling on the grid
/// (c = kinetic_prefactor), by symmetric tridiagonal diagonalization;
/// eigenvectors recovered by inverse iteration.
std::vector<Eigenpair> solve_bound_states(const Potential& V, const Grid& grid,
                                          double kinetic_prefactor,
                                          double energy_ceiling);

struct RefinedLevel {
  double energy;          // Richardson-extrapolated over grid doubling
  double doubling_shift;  // |E(2N) - E(N)| / max(|E|, 1): convergence gauge
};

/// Eigenvalues solved on the grid and on its doubled refinement, combined by
/// (4 E_fine - E_coarse)/3. Levels present on the coarse grid only are
/// dropped. Throws NumericError when the doubling shift exceeds
/// `shift_tolerance` (pass +inf to disable the check).
std::vector<RefinedLevel> solve_bound_states_refined(
    const Potential& V, const Grid& grid, double kinetic_prefactor,
    double energy_ceiling, double shift_tolerance = 1e-3);

/// Adaptive Gauss-Kronrod estimate of the integral of f over [a, b].
/// Throws NumericError when the error estimate fails rel_tol against the
/// L1 mass of the integrand.
double quadrature(const std::function<double(double)>& f, double a, double b,
                  double rel_tol);

/// max over interior grid points of |-c psi'' + (V - E) psi| / max |psi|,
/// psi'' by 5-point central differences.
double ode_residual(const Potential& V, double E,
                    const std::function<double(double)>& psi, const Grid& grid,
                    double kinetic_prefactor);

/// Sign changes of f over a log-spaced scan of (r_lo, r_hi); values below
/// 1e-12 of the scan's maximum magnitude are treated as zero crossings in
/// progress rather than sign flips.
int count_sign_changes(const std::function<double(double)>& f, double r_lo,
                       double r_hi, int samples = 4000);

}  // namespace hsusy::oracle
