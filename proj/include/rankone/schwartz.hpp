#pragma once

#include <string>
#include <vector>

#include "rankone/groups.hpp"
#include "rankone/spectral_function.hpp"
#include "rankone/spherical.hpp"

namespace rankone {

/// Radial grid used by a seminorm scan: `points` nodes t_i = expm1(u_i), u
/// equispaced on [0, log1p(t_max)], plus t = 0.
struct SeminormGrid {
  double t_max = 40.0;
  int points = 800;
};

struct SeminormReport {
  double r = 0.0;
  int deriv_order = 0;
  /// max_t |f^(k)(t)| Xi(t)^{-1} (1 + sigma(t))^r over the grid.
  double value = 0.0;
  SeminormGrid grid_spec;
  /// Location of the maximum.
  double saturated_at = 0.0;
  /// The maximum still sat at the right end of the grid after extending to
  /// the cap, i.e. the weighted function was still growing there.
  bool boundary_saturated = false;
};

/// Spectral tube |Im lam| <= half_width = epsilon rho.
struct TubeSpec {
  double epsilon = 0.0;
  double half_width = 0.0;
};

struct MembershipBudget {
  double weyl_tol = 1e-8;
  std::vector<int> decay_orders{2, 4, 6};
  /// sup |A| (1+|lam|)^N must stay below this ...
  double decay_bound = 1e6;
  /// ... and the sup over the outer quarter of the grid must not exceed
  /// tail_ratio times the global sup (the weighted symbol must be falling).
  double tail_ratio = 0.5;
  int max_divided_order = 4;
  /// |k-th divided difference| * k! <= smooth_bound (1 + sup |A|).
  double smooth_bound = 1e3;
};

struct CriterionReport {
  std::string name;
  bool passed = false;
  double value = 0.0;
  double threshold = 0.0;
  /// Grid location where `value` is attained.
  double witness = 0.0;
};

struct MembershipReport {
  bool passed = false;
  std::vector<CriterionReport> criteria;
};

struct TubeReport {
  TubeSpec tube;
  std::vector<cplx> points;
  std::vector<cplx> values;
  std::vector<double> err_est;
  double max_modulus = 0.0;
  bool finite = true;
  /// max |H(x + 0i) - hc_transform(x)| over the real points.
  double real_axis_defect = 0.0;
  /// max |H(x + iy) - conj H(x - iy)|.
  double conjugacy_defect = 0.0;
};

namespace schwartz {

inline constexpr double kGridCap = 160.0;

/// Estimates sup_t |f^(k)(t)| Xi(t)^{-1} (1 + sigma(t))^r on a log-dense
/// grid, doubling t_max (up to kGridCap) while the maximum sits at the end of
/// the grid. Xi is divided out in log space. Throws PreconditionError when
/// k > 2 or r < 0, DomainError with the location on a non-finite sample.
SeminormReport schwartz_seminorm(const GroupDatum& g, const RadialProfile& f, double r, int k,
                                 SeminormGrid grid = {});

/// Throws ValidationError unless 0 <= epsilon <= 1.
TubeSpec make_tube(const GroupDatum& g, double epsilon);

/// max_j |A(lam_j) - A(-lam_j)|. Throws PreconditionError on an asymmetric grid.
double weyl_symmetry_defect(const SpectralFunction& a);

/// Weyl invariance, rapid decay for each N, and bounded divided differences
/// up to the budgeted order, each reported with its witness.
MembershipReport image_membership(const GroupDatum& g, const SpectralFunction& a,
                                  const MembershipBudget& budget = {});

/// Hf on the 5 x 5 grid x in {-2,...,2}, y in {-w, -w/2, 0, w/2, w}. Requires
/// decay rate > (1 + epsilon) rho (or equal with poly < -2).
TubeReport tube_extension_check(const GroupDatum& g, const RadialProfile& f,
                                const TubeSpec& tube, const specfun::QuadratureSpec& q);

}  // namespace schwartz
}  // namespace rankone
