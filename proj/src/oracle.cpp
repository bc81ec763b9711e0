#include "hsusy/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <random>
#include <string>

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace hsusy::oracle {

std::vector<double> Grid::points() const {
  std::vector<double> pts(n_points);
  const double step = h();
  for (int i = 0; i < n_points; ++i) pts[i] = r_min + i * step;
  pts.back() = r_max;
  return pts;
}

Grid make_grid(double r_min, double r_max, int n_points) {
  if (!(r_min < r_max))
    throw ValidationError("grid requires r_min < r_max");
  if (n_points < 200)
    throw ValidationError("grid requires n_points >= 200");
  return Grid{r_min, r_max, n_points};
}

int default_grid_points() {
  if (const char* env = std::getenv("HULTHEN_SUSY_GRID_POINTS")) {
    const int n = std::atoi(env);
    if (n >= 200) return n;
  }
  return 8000;
}

namespace {

// Tridiagonal LU with partial pivoting (one superdiagonal of fill), for the
// shifted systems of inverse iteration.
struct TridiagPLU {
  std::vector<double> dl, d, du, du2;
  std::vector<int> piv;

  TridiagPLU(const std::vector<double>& diag, double off, double shift) {
    const int n = int(diag.size());
    d.resize(n);
    dl.assign(n > 1 ? n - 1 : 0, off);
    du.assign(n > 1 ? n - 1 : 0, off);
    du2.assign(n > 2 ? n - 2 : 0, 0.0);
    piv.assign(n, 0);
    for (int i = 0; i < n; ++i) d[i] = diag[i] - shift;
    for (int i = 0; i < n - 1; ++i) {
      if (std::fabs(d[i]) >= std::fabs(dl[i])) {
        piv[i] = i;
        if (d[i] == 0.0) d[i] = 1e-300;
        const double fact = dl[i] / d[i];
        dl[i] = fact;
        d[i + 1] -= fact * du[i];
      } else {
        piv[i] = i + 1;
        const double fact = d[i] / dl[i];
        d[i] = dl[i];
        dl[i] = fact;
        const double temp = du[i];
        du[i] = d[i + 1];
        d[i + 1] = temp - fact * d[i + 1];
        if (i < n - 2) {
          du2[i] = du[i + 1];
          du[i + 1] = -fact * du[i + 1];
        }
      }
    }
    if (d[n - 1] == 0.0) d[n - 1] = 1e-300;
  }

  void solve(std::vector<double>& b) const {
    const int n = int(d.size());
    for (int i = 0; i < n - 1; ++i) {
      if (piv[i] == i) {
        b[i + 1] -= dl[i] * b[i];
      } else {
        std::swap(b[i], b[i + 1]);
        b[i + 1] -= dl[i] * b[i];
      }
    }
    b[n - 1] /= d[n - 1];
    if (n > 1) b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / d[n - 2];
    for (int i = n - 3; i >= 0; --i)
      b[i] = (b[i] - du[i] * b[i + 1] - du2[i] * b[i + 2]) / d[i];
  }
};

std::vector<double> inverse_iteration(const std::vector<double>& diag,
                                      double off, double lambda) {
  const int n = int(diag.size());
  // Nudge the shift off the exact eigenvalue so the factorization stays
  // usable; inverse iteration converges in very few sweeps regardless.
  const double scale = std::max(std::fabs(lambda), 1.0);
  const TridiagPLU lu(diag, off, lambda + 1e-9 * scale);
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::vector<double> x(n);
  for (double& v : x) v = unif(rng);
  for (int sweep = 0; sweep < 4; ++sweep) {
    lu.solve(x);
    double nrm = 0.0;
    for (double v : x) nrm += v * v;
    nrm = std::sqrt(nrm);
    if (!(nrm > 0.0) || !std::isfinite(nrm))
      throw NumericError("inverse iteration broke down");
    for (double& v : x) v /= nrm;
  }
  return x;
}

}  // namespace

std::vector<Eigenpair> solve_bound_states(const Potential& V, const Grid& grid,
                                          double kinetic_prefactor,
                                          double energy_ceiling) {
  const int n = grid.n_points - 2;  // interior nodes
  const double h = grid.h();
  const double kin = kinetic_prefactor / (h * h);
  std::vector<double> diag(n);
  for (int i = 0; i < n; ++i) {
    const double r = grid.r_min + (i + 1) * h;
    const double v = V(r);
    if (!std::isfinite(v))
      throw NumericError("potential not finite at r = " + std::to_string(r));
    diag[i] = 2.0 * kin + v;
  }
  const double off = -kin;

  Eigen::Map<const Eigen::VectorXd> dvec(diag.data(), n);
  Eigen::VectorXd evec = Eigen::VectorXd::Constant(n - 1, off);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(dvec, evec, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw NumericError("tridiagonal diagonalization failed");

  std::vector<Eigenpair> out;
  for (int k = 0; k < n; ++k) {
    const double lambda = solver.eigenvalues()[k];
    if (lambda >= energy_ceiling) break;
    Eigenpair pair;
    pair.energy = lambda;
    const std::vector<double> x = inverse_iteration(diag, off, lambda);
    pair.psi.assign(grid.n_points, 0.0);
    std::copy(x.begin(), x.end(), pair.psi.begin() + 1);
    // Trapezoid normalization; ends are Dirichlet zeros.
    double nrm2 = 0.0;
    for (double v : pair.psi) nrm2 += v * v;
    nrm2 *= h;
    double s = 1.0 / std::sqrt(nrm2);
    // Fix the overall sign so the largest-magnitude lobe is positive.
    const auto it = std::max_element(
        pair.psi.begin(), pair.psi.end(),
        [](double a, double b) { return std::fabs(a) < std::fabs(b); });
    if (*it < 0.0) s = -s;
    for (double& v : pair.psi) v *= s;
    out.push_back(std::move(pair));
  }
  return out;
}

std::vector<RefinedLevel> solve_bound_states_refined(const Potential& V,
                                                     const Grid& grid,
                                                     double kinetic_prefactor,
                                                     double energy_ceiling,
                                                     double shift_tolerance) {
  const auto coarse =
      solve_bound_states(V, grid, kinetic_prefactor, energy_ceiling);
  const Grid fine{grid.r_min, grid.r_max, 2 * grid.n_points - 1};
  const auto refined =
      solve_bound_states(V, fine, kinetic_prefactor, energy_ceiling);

  std::vector<RefinedLevel> out;
  const size_t count = std::min(coarse.size(), refined.size());
  for (size_t k = 0; k < count; ++k) {
    RefinedLevel lvl;
    const double ec = coarse[k].energy, ef = refined[k].energy;
    lvl.energy = (4.0 * ef - ec) / 3.0;
    lvl.doubling_shift = std::fabs(ef - ec) / std::max(std::fabs(ef), 1.0);
    if (lvl.doubling_shift > shift_tolerance)
      throw NumericError(
          "eigenvalue not converged under grid doubling (level " +
          std::to_string(k) + ", shift " + std::to_string(lvl.doubling_shift) +
          ")");
    out.push_back(lvl);
  }
  return out;
}

double quadrature(const std::function<double(double)>& f, double a, double b,
                  double rel_tol) {
  using boost::math::quadrature::gauss_kronrod;
  double error = 0.0, l1 = 0.0;
  const double value =
      gauss_kronrod<double, 15>::integrate(f, a, b, 15, rel_tol, &error, &l1);
  const double scale = std::max(l1, 1e-300);
  if (!(error <= rel_tol * scale))
    throw NumericError("quadrature did not converge to the requested tolerance");
  return value;
}

double ode_residual(const Potential& V, double E,
                    const std::function<double(double)>& psi, const Grid& grid,
                    double kinetic_prefactor) {
  const auto pts = grid.points();
  const int n = grid.n_points;
  const double h = grid.h();
  std::vector<double> vals(n);
  double sup = 0.0;
  for (int i = 0; i < n; ++i) {
    vals[i] = psi(pts[i]);
    sup = std::max(sup, std::fabs(vals[i]));
  }
  if (!(sup > 0.0)) throw NumericError("ode_residual: wavefunction vanishes");
  double worst = 0.0;
  for (int i = 2; i < n - 2; ++i) {
    const double d2 = (-vals[i - 2] + 16.0 * vals[i - 1] - 30.0 * vals[i] +
                       16.0 * vals[i + 1] - vals[i + 2]) /
                      (12.0 * h * h);
    const double res =
        -kinetic_prefactor * d2 + (V(pts[i]) - E) * vals[i];
    worst = std::max(worst, std::fabs(res));
  }
  return worst / sup;
}

int count_sign_changes(const std::function<double(double)>& f, double r_lo,
                       double r_hi, int samples) {
  const double llo = std::log(r_lo), lhi = std::log(r_hi);
  std::vector<double> vals(samples);
  double sup = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double r = std::exp(llo + (lhi - llo) * i / (samples - 1));
    vals[i] = f(r);
    sup = std::max(sup, std::fabs(vals[i]));
  }
  const double floor = 1e-12 * sup;
  int changes = 0;
  int last_sign = 0;
  for (double v : vals) {
    if (std::fabs(v) <= floor) continue;
    const int s = v > 0.0 ? 1 : -1;
    if (last_sign != 0 && s != last_sign) ++changes;
    last_sign = s;
  }
  return changes;
}

}  // namespace hsusy::oracle
