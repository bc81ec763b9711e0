#include "hsusy/specfun.hpp"

#include <cmath>
#include <limits>

#include "hsusy/types.hpp"

namespace hsusy::specfun {

double log_gamma(double x) {
  if (!(x > 0.0))
    throw ValidationError("log_gamma requires x > 0");
  return std::lgamma(x);
}

double gen_binomial(double a, int k) {
  if (k < 0)
    throw ValidationError("gen_binomial requires k >= 0");
  double prod = 1.0;
  for (int j = 0; j < k; ++j)
    prod *= (a - j) / (j + 1);
  return prod;
}

SignedLog log_gen_binomial(double a, int k) {
  if (k < 0)
    throw ValidationError("gen_binomial requires k >= 0");
  SignedLog out{0.0, 1};
  for (int j = 0; j < k; ++j) {
    const double f = a - j;
    if (f == 0.0)
      return {-std::numeric_limits<double>::infinity(), 0};
    if (f < 0.0)
      out.sign = -out.sign;
    out.log_abs += std::log(std::fabs(f)) - std::log(double(j + 1));
  }
  return out;
}

double jacobi_eval(const JacobiParams& p, double z) {
  const int n = p.degree;
  if (n < 0)
    throw ValidationError("jacobi_eval requires degree >= 0");
  if (n == 0) return 1.0;
  double sum = 0.0;
  for (int m = 0; m <= n; ++m) {
    sum += gen_binomial(p.a + n, m) * gen_binomial(p.b + n, n - m) *
           std::pow(z - 1.0, n - m) * std::pow(z + 1.0, m);
  }
  return std::ldexp(sum, -n);
}

namespace {

// Term-by-term derivative of the explicit sum; handles the parameter values
// where the degree-lowering identity loses accuracy.
double jacobi_sum_deriv(const JacobiParams& p, double z, int order) {
  const int n = p.degree;
  double sum = 0.0;
  for (int m = 0; m <= n; ++m) {
    const double c = gen_binomial(p.a + n, m) * gen_binomial(p.b + n, n - m);
    const double pe = n - m, qe = m;
    double d = 0.0;
    if (order == 1) {
      if (pe > 0) d += pe * std::pow(z - 1.0, pe - 1) * std::pow(z + 1.0, qe);
      if (qe > 0) d += qe * std::pow(z - 1.0, pe) * std::pow(z + 1.0, qe - 1);
    } else {
      if (pe > 1) d += pe * (pe - 1) * std::pow(z - 1.0, pe - 2) * std::pow(z + 1.0, qe);
      if (pe > 0 && qe > 0)
        d += 2 * pe * qe * std::pow(z - 1.0, pe - 1) * std::pow(z + 1.0, qe - 1);
      if (qe > 1) d += qe * (qe - 1) * std::pow(z - 1.0, pe) * std::pow(z + 1.0, qe - 2);
    }
    sum += c * d;
  }
  return std::ldexp(sum, -n);
}

}  // namespace

double jacobi_deriv(const JacobiParams& p, double z, int order) {
  if (order != 1 && order != 2)
    throw ValidationError("jacobi_deriv requires order 1 or 2");
  const int n = p.degree;
  if (n < order) return 0.0;

  const double f1 = n + p.a + p.b + 1.0;
  if (order == 1) {
    if (std::fabs(f1) < 1e-12) return jacobi_sum_deriv(p, z, 1);
    return 0.5 * f1 * jacobi_eval({n - 1, p.a + 1.0, p.b + 1.0}, z);
  }
  const double f2 = n + p.a + p.b + 2.0;
  if (std::fabs(f1) < 1e-12 || std::fabs(f2) < 1e-12)
    return jacobi_sum_deriv(p, z, 2);
  return 0.25 * f1 * f2 * jacobi_eval({n - 2, p.a + 2.0, p.b + 2.0}, z);
}

std::vector<double> jacobi_coefficients(const JacobiParams& p) {
  const int n = p.degree;
  if (n < 0)
    throw ValidationError("jacobi_coefficients requires degree >= 0");
  std::vector<double> coeffs(n + 1, 0.0);
  // Expand each (z-1)^{n-m} (z+1)^m term through integer binomials.
  for (int m = 0; m <= n; ++m) {
    const double c = std::ldexp(
        gen_binomial(p.a + n, m) * gen_binomial(p.b + n, n - m), -n);
    for (int j = 0; j <= n - m; ++j) {
      const double cj = gen_binomial(double(n - m), j) *
                        ((n - m - j) % 2 ? -1.0 : 1.0);
      for (int k = 0; k <= m; ++k) {
        const double ck = gen_binomial(double(m), k);
        coeffs[j + k] += c * cj * ck;
      }
    }
  }
  return coeffs;
}

}  // namespace hsusy::specfun
