#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "rankone/groups.hpp"
#include "rankone/quadrature.hpp"
#include "rankone/spectral_function.hpp"
#include "rankone/spherical.hpp"

namespace rankone {

struct TransformResult {
  SpectralFunction spectral;
  /// Quadrature error estimate per grid sample.
  std::vector<double> err_est;
  GroupDatum group;
};

namespace transform {

/// Default spectral grid: |lam| <= 12, 481 samples.
std::vector<double> default_grid();

/// Hf(lam) = int_0^inf f(t) phi_lam(t) Delta(t) dt for one (possibly complex)
/// parameter. Requires f to decay strictly faster than
/// e^{-(rho + |Im lam|) t} (1+t)^{-2}; throws PreconditionError otherwise.
specfun::QuadResult hc_transform_at(const GroupDatum& g, const RadialProfile& f,
                                    SpectralParameter lam, const specfun::QuadratureSpec& q);

/// Spherical transform on a grid. Both lam and -lam are computed (no
/// mirroring), so the Weyl symmetry of the output is a genuine check.
TransformResult hc_transform(const GroupDatum& g, const RadialProfile& f,
                             const std::vector<double>& grid, const specfun::QuadratureSpec& q);

/// (f * g)(1) = int_0^inf f(t) g(t) Delta(t) dt.
specfun::QuadResult convolve_at_identity(const GroupDatum& g, const RadialProfile& f,
                                         const RadialProfile& h,
                                         const specfun::QuadratureSpec& q);

/// Wave packet
///   psi_a(t) = (1/|W|) c_P int_R a(nu) phi_nu(t) |c(nu)|^{-2} dnu
///            = c_P int_0^inf a(nu) phi_nu(t) |c(nu)|^{-2} dnu   (a even).
///
/// The nu-integral uses one fixed composite Gauss-Legendre rule for all t, so
/// psi is a fixed linear combination of spherical functions: smooth in t and
/// safe to difference numerically. Closed-form symbols get panels of width
/// 1/4 with `q.order` nodes up to the cutoff where |a| times the density falls
/// below abs_tol; sampled symbols get one 8-node panel per grid cell. Values
/// are memoized per t; the object is thread-safe and cheap to copy.
class WavePacket {
 public:
  WavePacket(const GroupDatum& g, const SpectralFunction& a, const specfun::QuadratureSpec& q);

  cplx operator()(double t) const;
  /// Radial profile backed by this packet, with inferred decay metadata.
  RadialProfile profile() const;
  /// Difference to a rule of twice the resolution at t in {0, 5, 20}.
  double err_est() const;
  double cutoff() const;
  std::size_t nodes() const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

cplx wave_packet(const GroupDatum& g, const SpectralFunction& a, double t,
                 const specfun::QuadratureSpec& q);

/// Plancherel constant c_P making H(psi_a0)(1) = a0(1) for a0(lam) = e^{-lam^2},
/// with psi computed at c_P = 1 and rescaled. Ignores g.plancherel_constant.
double calibrate(const GroupDatum& g, const specfun::QuadratureSpec& q);

/// (1/|W|) c_P int_R A(nu) B(nu) |c(nu)|^{-2} dnu for Weyl-even A, B with
/// decay order >= 4.
specfun::QuadResult plancherel_pairing(const GroupDatum& g, const SpectralFunction& a,
                                       const SpectralFunction& b,
                                       const specfun::QuadratureSpec& q);

enum class CartanClass { split, compact };

/// One Cartan-class term of the series expansion of Hf(lam).
///
/// split: c_P int_0^inf Hf(nu) m(nu) |c(nu)|^{-2} dnu with the Weyl-symmetric
///   Gaussian m(nu) = [G(nu - lam) + G(nu + lam)] / Z, G(x) = exp(-x^2 / 2 eps^2),
///   Z fixed so m has unit mass for (1/|W|) c_P |c|^{-2} dnu. This is the
///   character of f * phi_lam with phi_lam replaced by a spectrally mollified
///   packet; it tends to Hf(lam) as eps -> 0.
/// compact: discrete-series characters vanish on K-biinvariant functions, so
///   the term is identically 0.
///
/// Throws DomainError unless 0 < eps <= 1.
cplx expansion_term(const GroupDatum& g, CartanClass cls, const RadialProfile& f,
                    SpectralParameter lam, double eps, const specfun::QuadratureSpec& q);

/// Radial part of the Casimir operator, p'' + (Delta'/Delta) p'. Throws
/// DomainError at t <= 0.
cplx casimir_radial(const GroupDatum& g, const RadialProfile& p, double t);

/// Pointwise product a * m on the grid (and on the closed form, if any).
/// `degree` is the polynomial degree of m; the decay order drops by it.
SpectralFunction spectral_multiplier(const SpectralFunction& a,
                                     const std::function<cplx(double)>& m, double degree);

/// The Casimir eigenvalue on phi_lam, -(lam^2 + rho^2).
std::function<cplx(double)> casimir_symbol(const GroupDatum& g);

}  // namespace transform
}  // namespace rankone
