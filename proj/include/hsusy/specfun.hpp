#pragma once

#include <vector>

namespace hsusy::specfun {

/// Jacobi polynomial P_n^{(a,b)} with arbitrary real parameters. The
/// parameters met in this library are typically negative and non-integer
/// (a_n > 0 paired with b_n < -2n), which rules out most canned routines.
struct JacobiParams {
  int degree;  // n >= 0
  double a;
  double b;
};

/// ln Gamma(x) for x > 0. Throws ValidationError for x <= 0.
double log_gamma(double x);

/// Generalized binomial coefficient a(a-1)...(a-k+1)/k! for any real a.
double gen_binomial(double a, int k);

/// Magnitude-and-sign form of gen_binomial for overflow-safe products.
/// sign == 0 means the value is exactly zero (log_abs is then -inf).
struct SignedLog {
  double log_abs;
  int sign;
};
SignedLog log_gen_binomial(double a, int k);

/// P_n^{(a,b)}(z) by the explicit finite sum
///   2^{-n} sum_m C(a+n, m) C(b+n, n-m) (z-1)^{n-m} (z+1)^m.
double jacobi_eval(const JacobiParams& p, double z);

/// First or second z-derivative (order in {1,2}). Uses the degree-lowering
/// identity d/dz P_n^{(a,b)} = (n+a+b+1)/2 P_{n-1}^{(a+1,b+1)}; when the
/// prefactor degenerates (|n+a+b+1| < 1e-12) the explicit sum is
/// differentiated term by term instead.
double jacobi_deriv(const JacobiParams& p, double z, int order);

/// Monomial coefficients of P_n^{(a,b)}: c[0] + c[1] z + ... + c[n] z^n.
std::vector<double> jacobi_coefficients(const JacobiParams& p);

}  // namespace hsusy::specfun
