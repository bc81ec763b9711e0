#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hsusy/eckart.hpp"
#include "hsusy/specfun.hpp"
#include "hsusy/types.hpp"

namespace hsusy::extensions {

/// The three families of polynomial-type nodeless factorization functions.
/// Types I and II produce extensions strictly isospectral to an Eckart
/// potential with A shifted by -alpha resp. +alpha; type III adds one extra
/// bound state below that spectrum.
enum class Kind { I, II, III };

const char* kind_name(Kind k);

struct ExtensionSpec {
  Kind kind;
  int m;                         // seed polynomial degree
  eckart::EckartParams target;   // the (A, B, alpha) of the extended potential
};

/// nullopt when the kind-specific parameter window holds (strictly at every
/// boundary); otherwise a report naming the violated inequality.
std::optional<std::string> check(const ExtensionSpec& spec);
void validate(const ExtensionSpec& spec);

/// Parameters of the base potential the extension is factorized from:
/// A' = A - alpha for type I, A' = A + alpha for types II and III.
eckart::EckartParams base_params(const ExtensionSpec& spec);

/// Energy of the seed solution; strictly below the base ground state.
double seed_energy(const ExtensionSpec& spec);

/// The nodeless seed eta(r) = (z-1)^{a/2}(z+1)^{b/2} g_m(z) solving the base
/// equation at seed_energy.
double seed_eta(const ExtensionSpec& spec, double r);

/// Jacobi parameters of the seed polynomial g_m for the given target
/// parameters (degree field = m).
specfun::JacobiParams g_params(Kind kind, const eckart::EckartParams& target,
                               int m);

/// g_m(z) or its first/second z-derivative (deriv in {0,1,2}).
double g_poly(const ExtensionSpec& spec, double z, int deriv);

/// The rational correction
///   U_rat = 2 alpha^2 (1-z^2) { 2z g'/g - (1-z^2)[g''/g - (g'/g)^2] - m },
/// evaluated as a ratio of polynomials in w = tanh(alpha r) so that neither
/// the z -> infinity end (r -> 0) nor the z -> 1 end loses accuracy.
double rational_part(const ExtensionSpec& spec, double r);

/// target potential + rational_part.
double extended_potential(const ExtensionSpec& spec, double r);

/// Monomial coefficients of the numerator polynomial of the extended
/// wavefunctions: the two-term combination of g_m P_{n-1} and the
/// degree-shifted companion g times P_n (P_{-1} identically zero).
std::vector<double> y_coefficients(const ExtensionSpec& spec, int n);

/// y evaluated at z.
double y_poly(const ExtensionSpec& spec, int n, double z);

/// Unnormalized extended wavefunction; valid n are the non-negative spectrum
/// indices, plus n = -m-1 for type III (the extra ground state 1/eta).
double extended_wavefunction_unnorm(const ExtensionSpec& spec, int n,
                                    double r);
double extended_wavefunction_unnorm_deriv(const ExtensionSpec& spec, int n,
                                          double r);

/// Quadrature normalization constant c with integral of (c phi)^2 equal to
/// one. Closed-form constants exist for the base families but not here; the
/// extension constants are always computed numerically.
double normalize_numerically(const ExtensionSpec& spec, int n);

/// Full spectrum of the extended potential, lowest energy first. Types I/II
/// reproduce the base spectrum of base_params(); type III carries the extra
/// state (index -m-1) in front.
std::vector<BoundState> extended_spectrum(const ExtensionSpec& spec);

namespace detail {

/// rational_part without the validity-window check; the enlarged
/// shape-invariance identity relates potentials whose (m, A) land outside
/// the constructive window.
double rational_part_raw(Kind kind, const eckart::EckartParams& target, int m,
                         double r);

}  // namespace detail

}  // namespace hsusy::extensions
