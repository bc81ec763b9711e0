#pragma once

#include <functional>
#include <stdexcept>

namespace hsusy {

/// Parameter or domain violation. The message names the condition that
/// failed (e.g. "requires B > A^2"). The CLI maps this to exit code 2.
class ValidationError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Numeric failure: quadrature non-convergence, diagonalization breakdown,
/// unresolved grid. The CLI maps this to exit code 3.
class NumericError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A function of one radial coordinate with an optional analytic derivative.
/// Consumers fall back to finite differences when `deriv` is empty.
struct RadialFn {
  std::function<double(double)> value;
  std::function<double(double)> deriv;

  bool has_deriv() const { return static_cast<bool>(deriv); }
  double operator()(double r) const { return value(r); }
};

/// One bound state: spectral index (negative for the extra state of a
/// type-III extension), energy, normalization constant and the normalized
/// wavefunction.
struct BoundState {
  int index = 0;
  double energy = 0.0;
  double norm = 1.0;
  RadialFn psi;
};

}  // namespace hsusy
