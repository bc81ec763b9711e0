#include "hsusy/eckart.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "hsusy/specfun.hpp"

namespace hsusy::eckart {

void validate(const EckartParams& p) {
  if (!(p.A > 0.0) || !(p.B > 0.0) || !(p.alpha > 0.0))
    throw ValidationError("Eckart parameters require A > 0, B > 0, alpha > 0");
  if (!(p.A >= p.alpha))
    throw ValidationError("Eckart parameters require A >= alpha");
  if (!(p.B > p.A * p.A))
    throw ValidationError(
        "Eckart parameters require B > A^2 (bound-state existence)");
}

double potential(const EckartParams& p, double r) {
  if (!(r > 0.0))
    throw ValidationError("Eckart potential requires r > 0");
  const ZParts zp = z_parts(p.alpha, r);
  const double csch2 = zp.z * zp.z - 1.0;  // csch^2 = coth^2 - 1
  return p.A * (p.A - p.alpha) * csch2 - 2.0 * p.B * zp.z;
}

int num_bound_states(const EckartParams& p) {
  validate(p);
  const double limit = (std::sqrt(p.B) - p.A) / p.alpha;
  // Strict inequality n < limit: ceil counts it exactly, an integral limit
  // excluding the marginal state by itself.
  return static_cast<int>(std::ceil(limit));
}

namespace {

void check_index(const EckartParams& p, int n) {
  const int count = num_bound_states(p);
  if (n < 0 || n >= count)
    throw std::out_of_range("bound-state index " + std::to_string(n) +
                            " outside [0, " + std::to_string(count) + ")");
}

}  // namespace

double energy(const EckartParams& p, int n) {
  check_index(p, n);
  const double t = p.A + n * p.alpha;
  return -t * t - p.B * p.B / (t * t);
}

Exponents exponents(const EckartParams& p, int n) {
  check_index(p, n);
  const double t = p.A + n * p.alpha;
  const double a = (-t + p.B / t) / p.alpha;
  const double b = (-t - p.B / t) / p.alpha;
  return {a, b};
}

ZParts z_parts(double alpha, double r) {
  const double e = std::exp(-2.0 * alpha * r);
  const double om = -std::expm1(-2.0 * alpha * r);  // 1 - e, accurate near 0
  ZParts out;
  out.z = (1.0 + e) / om;
  out.log_zm1 = std::log(2.0) - 2.0 * alpha * r - std::log(om);
  out.log_zp1 = std::log(2.0) - std::log(om);
  return out;
}

double z_deriv(double alpha, double z) { return alpha * (1.0 - z * z); }

namespace {

struct Profile {
  double a, b;
  int degree;
  double alpha;
};

double profile_value(const Profile& f, const ZParts& zp) {
  const double poly = specfun::jacobi_eval({f.degree, f.a, f.b}, zp.z);
  if (poly == 0.0) return 0.0;
  const double lg = 0.5 * f.a * zp.log_zm1 + 0.5 * f.b * zp.log_zp1 +
                    std::log(std::fabs(poly));
  return std::copysign(std::exp(lg), poly);
}

double profile_deriv(const Profile& f, const ZParts& zp) {
  // phi = exp(L) * P(z), L = (a/2)log(z-1) + (b/2)log(z+1)
  // phi' = exp(L) [ (a/2/(z-1) + b/2/(z+1)) P + P' ] dz/dr
  const double z = zp.z;
  const double poly = specfun::jacobi_eval({f.degree, f.a, f.b}, z);
  const double dpoly = f.degree > 0
                           ? specfun::jacobi_deriv({f.degree, f.a, f.b}, z, 1)
                           : 0.0;
  const double lterm = 0.5 * f.a / (z - 1.0) + 0.5 * f.b / (z + 1.0);
  const double inner = lterm * poly + dpoly;
  if (inner == 0.0) return 0.0;
  const double lg = 0.5 * f.a * zp.log_zm1 + 0.5 * f.b * zp.log_zp1 +
                    std::log(std::fabs(inner));
  return std::copysign(std::exp(lg), inner) * z_deriv(f.alpha, z);
}

}  // namespace

double wavefunction_unnorm(const EckartParams& p, int n, double r) {
  if (!(r > 0.0))
    throw ValidationError("wavefunction requires r > 0");
  const Exponents e = exponents(p, n);
  return profile_value({e.alpha_n, e.beta_n, n, p.alpha}, z_parts(p.alpha, r));
}

double wavefunction_unnorm_deriv(const EckartParams& p, int n, double r) {
  if (!(r > 0.0))
    throw ValidationError("wavefunction requires r > 0");
  const Exponents e = exponents(p, n);
  return profile_deriv({e.alpha_n, e.beta_n, n, p.alpha}, z_parts(p.alpha, r));
}

double normalization_for_exponents(double a, double b, int n, double alpha) {
  // Gamma arguments: a + 2n - m - m' >= a, -a - b - 2n + 1, -b - m - m' + 1
  // with m, m' <= n. Provably positive for every profile this library
  // builds; checked here because lgamma would silently accept the poles.
  if (!(a > 0.0))
    throw NumericError("normalization: exponent a must be positive");
  if (!(-a - b - 2.0 * n + 1.0 > 0.0))
    throw NumericError("normalization: -a-b-2n+1 must be positive");
  if (!(-b - 2.0 * n + 1.0 > 0.0))
    throw NumericError("normalization: -b-2n+1 must be positive");

  const double lg_mid = specfun::log_gamma(-a - b - 2.0 * n + 1.0);
  // Signed log-sum-exp over the double sum; long double accumulator keeps
  // headroom against the alternating signs.
  double max_log = -std::numeric_limits<double>::infinity();
  std::vector<double> logs((n + 1) * (n + 1));
  std::vector<int> signs((n + 1) * (n + 1));
  for (int m = 0; m <= n; ++m) {
    for (int mp = 0; mp <= n; ++mp) {
      const auto t1 = specfun::log_gen_binomial(a + n, m);
      const auto t2 = specfun::log_gen_binomial(-b - m - 1.0, n - m);
      const auto t3 = specfun::log_gen_binomial(a + n, mp);
      const auto t4 = specfun::log_gen_binomial(-b - mp - 1.0, n - mp);
      const double lg = t1.log_abs + t2.log_abs + t3.log_abs + t4.log_abs +
                        specfun::log_gamma(a + 2.0 * n - m - mp) + lg_mid -
                        specfun::log_gamma(-b - m - mp + 1.0);
      int s = t1.sign * t2.sign * t3.sign * t4.sign;
      if ((m + mp) % 2) s = -s;
      logs[m * (n + 1) + mp] = lg;
      signs[m * (n + 1) + mp] = s;
      if (s != 0 && lg > max_log) max_log = lg;
    }
  }
  long double acc = 0.0L;
  for (size_t i = 0; i < logs.size(); ++i)
    if (signs[i] != 0)
      acc += signs[i] * std::exp((long double)(logs[i] - max_log));
  if (!(acc > 0.0L))
    throw NumericError("normalization sum collapsed to a non-positive value");
  const double log_sum = max_log + (double)std::log(acc);
  const double log_norm = (-0.5 * (a + b) + 0.5) * std::log(2.0) +
                          0.5 * std::log(alpha) - 0.5 * log_sum;
  return std::exp(log_norm);
}

double normalization(const EckartParams& p, int n) {
  const Exponents e = exponents(p, n);
  return normalization_for_exponents(e.alpha_n, e.beta_n, n, p.alpha);
}

std::vector<BoundState> spectrum(const EckartParams& p) {
  const int count = num_bound_states(p);
  std::vector<BoundState> states;
  states.reserve(count);
  for (int n = 0; n < count; ++n) {
    BoundState s;
    s.index = n;
    s.energy = energy(p, n);
    s.norm = normalization(p, n);
    const double nn = s.norm;
    s.psi.value = [p, n, nn](double r) {
      return nn * wavefunction_unnorm(p, n, r);
    };
    s.psi.deriv = [p, n, nn](double r) {
      return nn * wavefunction_unnorm_deriv(p, n, r);
    };
    states.push_back(std::move(s));
  }
  return states;
}

}  // namespace hsusy::eckart
