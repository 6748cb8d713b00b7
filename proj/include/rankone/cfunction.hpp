#pragma once

#include <functional>

#include "rankone/groups.hpp"
#include "rankone/spherical.hpp"

namespace rankone {

/// Plancherel density of a group, |c(lam)|^{-2} (without the calibrated
/// constant). Even, nonnegative, polynomially bounded.
struct PlancherelDensity {
  GroupDatum group;
  std::function<double(double)> eval;
  bool even = true;
};

namespace cfunction {

/// Rank-one c-function in the Jacobi normalization
///   c(lam) = 2^{rho - i lam} Gamma(a+1) Gamma(i lam)
///            / (Gamma((rho + i lam)/2) Gamma((a - b + 1 + i lam)/2)),
/// a = jacobi_alpha, b = jacobi_beta, evaluated in log space. Complex lam is
/// accepted (meromorphic continuation). Throws PoleError where i lam is a
/// nonpositive integer, in particular at lam = 0.
cplx c_function(const GroupDatum& g, SpectralParameter lam);

/// |c(lam)|^{-2} for real lam; 0 at lam = 0.
double plancherel_density(const GroupDatum& g, double lam);

PlancherelDensity density_of(const GroupDatum& g);

/// C(nu) summed over Cartan classes. Only the split class carries spherical
/// spectrum; the compact class contributes nothing to K-biinvariant data.
double aggregate_density(const GroupDatum& g, double nu);

struct AsymptoticFit {
  cplx c_plus;
  cplx c_minus;
  /// max |data - fit| / max |data| over the window.
  double residual = 0.0;
  /// Condition number of the 2x2 normal equations.
  double condition = 0.0;
};

/// Independent estimate of c(lam): least-squares fit of
///   phi_lam(t) e^{rho t} ~ c_+ e^{i lam t} + c_- e^{-i lam t}
/// on 81 equispaced points in [T, T + 10]. The phi values come from the
/// boundary-integral representation when the preset has one (m_2alpha = 0),
/// otherwise from the closed form. Throws PreconditionError unless
/// e^{-2 rho T} < 1e-10, ConditioningError when lam is too small for the
/// window, AccuracyError when the residual exceeds 1e-6.
AsymptoticFit asymptotic_c_fit(const GroupDatum& g, double lam, double window_start);

/// c_+ of asymptotic_c_fit.
cplx asymptotic_c_oracle(const GroupDatum& g, double lam, double window_start);

}  // namespace cfunction
}  // namespace rankone
