#pragma once

#include <functional>
#include <string>

#include "rankone/groups.hpp"
#include "rankone/quadrature.hpp"
#include "rankone/specfun.hpp"

namespace rankone {

/// A point of the complexified dual of the Cartan subspace. In rank one this
/// is a single complex number; real values are the tempered parameters.
using SpectralParameter = cplx;

/// A K-biinvariant function on G, seen through the radial coordinate t >= 0.
struct RadialProfile {
  /// Smoothness value for closed-form (real-analytic) evaluators.
  static constexpr int kAnalytic = 1000;

  std::function<cplx(double)> eval;
  /// |eval(t)| <= decay(t) for all t >= 0.
  specfun::DecayBound decay;
  /// Highest derivative order the evaluator supports reliably (>= 2).
  int smoothness = 2;
  /// Optional analytic first and second derivatives.
  std::function<cplx(double)> d1;
  std::function<cplx(double)> d2;
  std::string label;

  /// Even extension: value at -t equals value at t.
  cplx operator()(double t) const { return eval(t < 0.0 ? -t : t); }
};

/// k-th radial derivative (k <= 2). Uses the analytic derivative when the
/// profile carries one, otherwise central differences with step
/// kDerivativeStep (the even extension supplies values left of 0).
inline constexpr double kDerivativeStep = 1e-4;
cplx radial_derivative(const RadialProfile& p, double t, int k);

/// Largest ratio |p(t)| / p.decay(t) over a log-spaced grid on (0, t_max].
/// Values <= 1 confirm the decay metadata on that grid.
double decay_ratio(const RadialProfile& p, double t_max = 40.0);

namespace spherical {

/// Elementary spherical function
///   phi_lam(t) = 2F1((rho + i lam)/2, (rho - i lam)/2; jacobi_alpha + 1; -sinh^2 t).
/// The Jacobi scaling is the identity on both the parameter and the radial
/// coordinate for every preset, a consequence of the Haar normalization in
/// GroupDatum. Throws DomainError for t < 0 or t so large that sinh^2 t
/// overflows.
cplx phi(const GroupDatum& g, SpectralParameter lam, double t);

/// d/dt phi_lam(t), through d/dx 2F1(a,b;c;x) = (ab/c) 2F1(a+1,b+1;c+1;x).
cplx phi_derivative(const GroupDatum& g, SpectralParameter lam, double t);

/// d^2/dt^2 phi_lam(t) from the same contiguous-parameter identity applied
/// twice (not from the eigen-equation).
cplx phi_second_derivative(const GroupDatum& g, SpectralParameter lam, double t);

/// Integral representation over the boundary sphere, for presets with
/// m_2alpha = 0 (real hyperbolic space H^n, n = m_alpha + 1):
///   phi_lam(t) = c_n int_0^pi (cosh t - sinh t cos th)^{-(i lam + rho)} sin^{n-2} th dth,
/// with c_n normalizing the measure to mass one. The base is evaluated as
/// e^t sin^2(th/2) + e^{-t} cos^2(th/2) to avoid cancellation, and the
/// th-range is split geometrically near 0 where the kernel concentrates.
/// Throws CapabilityError when m_2alpha != 0.
cplx phi_integral_oracle(const GroupDatum& g, SpectralParameter lam, double t);

/// Xi(t) = phi_0(t).
double xi(const GroupDatum& g, double t);

/// Constant K with Xi(t) <= K (1+t) e^{-rho t} for all t >= 0 (grid supremum
/// with a 5% margin, computed once per root system).
double xi_envelope(const GroupDatum& g);

/// Radial distance sigma(t) = |t|.
double sigma(double t);

/// phi_lam as a profile, with analytic derivatives (the second from the
/// radial eigen-equation) and decay K (1+t) e^{-(rho - |Im lam|) t}.
RadialProfile phi_profile(const GroupDatum& g, SpectralParameter lam);

}  // namespace spherical
}  // namespace rankone
