#pragma once

#include <vector>

#include "hsusy/types.hpp"

namespace hsusy::eckart {

/// Parameters of the Eckart potential
///   U_{A,B}(r; alpha) = A(A-alpha) csch^2(alpha r) - 2B coth(alpha r)
/// on the half line r > 0. A carries units of inverse length, B of inverse
/// length squared, alpha is the range parameter.
///
/// The struct itself is plain data; bound-state machinery additionally
/// requires A >= alpha and B > A^2, enforced by validate(). Rational
/// extensions legitimately use parameter values outside that window, so the
/// check is not baked into the type.
struct EckartParams {
  double A;
  double B;
  double alpha;
};

/// Throws ValidationError naming the violated condition unless
/// A, B, alpha > 0, A >= alpha and B > A^2.
void validate(const EckartParams& p);

double potential(const EckartParams& p, double r);

/// Number of bound states: the count of integers n with
/// 0 <= n < (sqrt(B) - A)/alpha, the inequality taken strictly.
int num_bound_states(const EckartParams& p);

/// E_n = -(A + n alpha)^2 - B^2/(A + n alpha)^2 for 0 <= n < num_bound_states.
double energy(const EckartParams& p, int n);

/// Exponent pair of the n-th wavefunction profile
///   (z-1)^{a_n/2} (z+1)^{b_n/2} P_n^{(a_n,b_n)}(z),  z = coth(alpha r);
/// a_n > 0 and b_n < -2n on the valid index range.
struct Exponents {
  double alpha_n;
  double beta_n;
};
Exponents exponents(const EckartParams& p, int n);

/// Unnormalized n-th wavefunction value; assembled in log space so that the
/// z = coth(alpha r) blow-up near r -> 0 never overflows.
double wavefunction_unnorm(const EckartParams& p, int n, double r);

/// d/dr of wavefunction_unnorm (analytic, through the chain rule in z).
double wavefunction_unnorm_deriv(const EckartParams& p, int n, double r);

/// Closed-form normalization constant N_n of the n-th state, evaluated as a
/// double finite sum over products of generalized binomials and Gamma
/// factors. All Gamma arguments are checked positive before use.
double normalization(const EckartParams& p, int n);

/// The same double sum for a general profile
///   (z-1)^{a/2}(z+1)^{b/2} P_deg^{(a,b)}(z):
/// 2^{-(a+b)/2+1/2} sqrt(alpha) { sum ... }^{-1/2}. Used for the base
/// spectrum (a = a_n, deg = n) and for hierarchy members (a = a_{n+i},
/// deg = n).
double normalization_for_exponents(double a, double b, int poly_degree,
                                   double alpha);

/// All bound states with normalized wavefunctions (analytic derivative
/// attached).
std::vector<BoundState> spectrum(const EckartParams& p);

/// z = coth(alpha r) together with log(z-1) and log(z+1), computed from
/// exp(-2 alpha r) so that nothing overflows for alpha*r down to 1e-300.
struct ZParts {
  double z;
  double log_zm1;
  double log_zp1;
};
ZParts z_parts(double alpha, double r);

/// dz/dr = alpha (1 - z^2).
double z_deriv(double alpha, double z);

}  // namespace hsusy::eckart
