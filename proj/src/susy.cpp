#include "hsusy/susy.hpp"

#include <cmath>
#include <string>

namespace hsusy::susy {

double superpotential(const eckart::EckartParams& p, double r) {
  if (!(r > 0.0))
    throw ValidationError("superpotential requires r > 0");
  const auto zp = eckart::z_parts(p.alpha, r);
  return -p.A * zp.z + p.B / p.A;
}

double superpotential_deriv(const eckart::EckartParams& p, double r) {
  if (!(r > 0.0))
    throw ValidationError("superpotential requires r > 0");
  const auto zp = eckart::z_parts(p.alpha, r);
  return p.A * p.alpha * (zp.z * zp.z - 1.0);
}

double partner_potential(const eckart::EckartParams& p, double r) {
  const double w = superpotential(p, r);
  const double e0 = -p.A * p.A - p.B * p.B / (p.A * p.A);
  return w * w + superpotential_deriv(p, r) + e0;
}

int max_hierarchy_index(const eckart::EckartParams& p) {
  return eckart::num_bound_states(p) - 1;
}

namespace {

void check_hierarchy_index(const eckart::EckartParams& p, int i) {
  const int top = max_hierarchy_index(p);
  if (i < 0 || i > top)
    throw std::out_of_range("hierarchy index " + std::to_string(i) +
                            " outside [0, " + std::to_string(top) + "]");
}

}  // namespace

double hierarchy_potential(const eckart::EckartParams& p, int i, double r) {
  check_hierarchy_index(p, i);
  return eckart::potential({p.A + i * p.alpha, p.B, p.alpha}, r);
}

std::vector<BoundState> hierarchy_spectrum(const eckart::EckartParams& p,
                                           int i) {
  check_hierarchy_index(p, i);
  const int count = eckart::num_bound_states(p) - i;
  std::vector<BoundState> states;
  states.reserve(count);
  const eckart::EckartParams shifted{p.A + i * p.alpha, p.B, p.alpha};
  for (int n = 0; n < count; ++n) {
    // The n-th state of member i carries the (n+i)-th exponents of the base,
    // which are exactly the n-th exponents of the A+i*alpha parameter set.
    BoundState s;
    s.index = n;
    s.energy = eckart::energy(p, n + i);
    s.norm = eckart::normalization(shifted, n);
    const double nn = s.norm;
    s.psi.value = [shifted, n, nn](double r) {
      return nn * eckart::wavefunction_unnorm(shifted, n, r);
    };
    s.psi.deriv = [shifted, n, nn](double r) {
      return nn * eckart::wavefunction_unnorm_deriv(shifted, n, r);
    };
    states.push_back(std::move(s));
  }
  return states;
}

double intertwine(double /*factorization_energy*/, const RadialFn& w,
                  const RadialFn& phi, double r) {
  double dphi;
  if (phi.has_deriv()) {
    dphi = phi.deriv(r);
  } else {
    const double h = std::max(1e-6 * r, 1e-7);
    dphi = (-phi(r + 2 * h) + 8.0 * phi(r + h) - 8.0 * phi(r - h) +
            phi(r - 2 * h)) /
           (12.0 * h);
  }
  return w(r) * phi(r) - dphi;
}

RadialFn intertwine_fn(const eckart::EckartParams& level, double E,
                       const RadialFn& phi) {
  if (!phi.has_deriv())
    throw ValidationError("intertwine_fn requires an analytic derivative");
  RadialFn out;
  out.value = [level, phi](double r) {
    return superpotential(level, r) * phi.value(r) - phi.deriv(r);
  };
  out.deriv = [level, E, phi](double r) {
    const double u = eckart::potential(level, r);
    return superpotential_deriv(level, r) * phi.value(r) +
           superpotential(level, r) * phi.deriv(r) - (u - E) * phi.value(r);
  };
  return out;
}

}  // namespace hsusy::susy
