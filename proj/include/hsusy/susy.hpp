#pragma once

#include <vector>

#include "hsusy/eckart.hpp"
#include "hsusy/types.hpp"

namespace hsusy::susy {

/// W(r) = -A coth(alpha r) + B/A, the log-derivative of the Eckart ground
/// state taken with a minus sign.
double superpotential(const eckart::EckartParams& p, double r);

/// W'(r) = A alpha csch^2(alpha r).
double superpotential_deriv(const eckart::EckartParams& p, double r);

/// W^2 + W' + E_0. Shape invariance makes this the Eckart potential with
/// A shifted by alpha: it equals potential({A+alpha, B, alpha}, r) pointwise.
double partner_potential(const eckart::EckartParams& p, double r);

/// Largest hierarchy index that still binds at least one state
/// (= num_bound_states(p) - 1).
int max_hierarchy_index(const eckart::EckartParams& p);

/// U^{(i)}(r) = potential({A + i alpha, B, alpha}, r) for 0 <= i <= max index.
double hierarchy_potential(const eckart::EckartParams& p, int i, double r);

/// Bound states of the i-th hierarchy member: energies are the base energies
/// shifted by i, wavefunctions are degree-n Jacobi profiles carrying the
/// (n+i)-th exponent pair, normalized in closed form.
std::vector<BoundState> hierarchy_spectrum(const eckart::EckartParams& p,
                                           int i);

/// First-order intertwiner W phi - phi', mapping a solution of the base
/// equation at energy E to a partner solution at the same E (and
/// annihilating the factorization function itself). factorization_energy
/// identifies the level W was built from; callers use it for bookkeeping,
/// the operator value does not depend on it. phi' is taken analytically
/// when available, else by 5-point central differences.
double intertwine(double factorization_energy, const RadialFn& w,
                  const RadialFn& phi, double r);

/// The intertwined function as a RadialFn with analytic derivative:
/// given phi solving the level's equation at energy E,
///   value = W phi - phi',  deriv = W' phi + W phi' - (U - E) phi
/// with W and U taken at `level` parameters.
RadialFn intertwine_fn(const eckart::EckartParams& level, double E,
                       const RadialFn& phi);

}  // namespace hsusy::susy
