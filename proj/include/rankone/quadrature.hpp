#pragma once

#include <functional>
#include <span>
#include <vector>

#include "rankone/specfun.hpp"

namespace rankone::specfun {

/// Exponential-type envelope |f(t)| <= c (1+t)^poly e^{-rate t} for t >= 0.
struct DecayBound {
  double c = 1.0;
  double rate = 0.0;
  double poly = 0.0;

  double operator()(double t) const;
  /// Upper bound of the tail integral over [t, inf). Infinite when the
  /// envelope is not integrable.
  double tail(double t) const;
};

/// How a half-line integral is cut off: T is the smallest multiple of `step`
/// with tail(T) <= tail_fraction * abs_tol, but never beyond t_cap.
struct TruncationPolicy {
  double tail_fraction = 0.1;
  double step = 0.5;
  double t_cap = 60.0;
};

struct QuadratureSpec {
  double rel_tol = 1e-12;
  double abs_tol = 1e-14;
  int max_subdivisions = 1 << 14;
  /// Gauss-Legendre nodes per panel.
  int order = 20;
  TruncationPolicy truncation{};

  /// Throws ValidationError unless rel_tol >= 1e-14, abs_tol > 0,
  /// 1 <= max_subdivisions <= 2^20 and 2 <= order <= 64.
  void validate() const;
};

struct QuadResult {
  cplx value;
  double err_est = 0.0;
};

using Integrand = std::function<cplx(double)>;

/// Gauss-Legendre nodes and weights on [-1, 1]; cached per order.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussRule& gauss_legendre(int order);

/// Fixed-order pairwise summation, independent of evaluation schedule.
cplx pairwise_sum(std::span<const cplx> values);

/// Globally adaptive composite Gauss-Legendre starting from the partition
/// given by `breaks` (strictly increasing, at least two points). Each panel is
/// estimated as |G(panel) - G(left half) - G(right half)|; panels whose
/// estimate sits at the roundoff floor of their absolute integral are not
/// refined further. Refinement stops once the summed estimate is below
/// max(abs_tol, rel_tol * int |f|).
QuadResult integrate_breakpoints(const Integrand& f, std::span<const double> breaks,
                                 const QuadratureSpec& q);

/// integrate_breakpoints on [lo, hi] split into `initial_panels` equal panels.
QuadResult integrate_interval(const Integrand& f, double lo, double hi,
                              const QuadratureSpec& q, int initial_panels = 1);

/// Cutoff T for an integrand with the given envelope.
double truncation_cutoff(const DecayBound& decay, const QuadratureSpec& q);

/// Integral over [0, inf): truncated at truncation_cutoff, unit initial panels,
/// err_est includes the tail bound.
QuadResult integrate_halfline(const Integrand& f, const DecayBound& decay,
                              const QuadratureSpec& q);

}  // namespace rankone::specfun
