#include "rankone/schwartz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rankone/errors.hpp"
#include "rankone/parallel.hpp"
#include "rankone/transform.hpp"

namespace rankone::schwartz {

namespace {

struct Scan {
  double log_value = -std::numeric_limits<double>::infinity();
  double at = 0.0;
  std::size_t index = 0;
  std::size_t size = 0;
};

Scan scan(const GroupDatum& g, const RadialProfile& f, double r, int k, const SeminormGrid& grid) {
  std::vector<double> ts{0.0};
  const double umax = std::log1p(grid.t_max);
  for (int i = 1; i <= grid.points; ++i) ts.push_back(std::expm1(umax * i / grid.points));
  ts.back() = grid.t_max;
  std::vector<double> logs(ts.size());
  detail::parallel_for(ts.size(), [&](std::size_t i) {
    const double t = ts[i];
    const cplx v = radial_derivative(f, t, k);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw DomainError("schwartz", "seminorm",
                        "non-finite derivative of order " + std::to_string(k) +
                            " at t = " + std::to_string(t));
    const double a = std::abs(v);
    logs[i] = a == 0.0 ? -std::numeric_limits<double>::infinity()
                       : std::log(a) - std::log(spherical::xi(g, t)) +
                             r * std::log1p(spherical::sigma(t));
  });
  Scan s;
  s.size = ts.size();
  for (std::size_t i = 0; i < ts.size(); ++i)
    if (logs[i] > s.log_value) s = Scan{logs[i], ts[i], i, ts.size()};
  return s;
}

// Newton divided difference of order k over grid[j..j+k].
cplx divided(const std::vector<double>& x, const std::vector<cplx>& y, std::size_t j, int k) {
  std::vector<cplx> d(y.begin() + j, y.begin() + j + k + 1);
  for (int level = 1; level <= k; ++level)
    for (int i = 0; i + level <= k; ++i)
      d[i] = (d[i + 1] - d[i]) / (x[j + i + level] - x[j + i]);
  return d[0];
}

}  // namespace

SeminormReport schwartz_seminorm(const GroupDatum& g, const RadialProfile& f, double r, int k,
                                 SeminormGrid grid) {
  if (k < 0 || k > 2)
    throw PreconditionError("schwartz", "seminorm", "derivative order must be 0, 1 or 2");
  if (!(r >= 0.0)) throw PreconditionError("schwartz", "seminorm", "r must be >= 0");
  if (k > f.smoothness)
    throw PreconditionError("schwartz", "seminorm", "profile does not support this order");
  Scan s = scan(g, f, r, k, grid);
  while (s.index + 1 == s.size && grid.t_max < kGridCap) {
    grid.t_max = std::min(kGridCap, 2.0 * grid.t_max);
    grid.points *= 2;
    s = scan(g, f, r, k, grid);
  }
  SeminormReport rep;
  rep.r = r;
  rep.deriv_order = k;
  rep.value = std::exp(s.log_value);
  rep.grid_spec = grid;
  rep.saturated_at = s.at;
  rep.boundary_saturated = s.size > 0 && s.index + 1 == s.size;
  return rep;
}

TubeSpec make_tube(const GroupDatum& g, double epsilon) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0))
    throw ValidationError("schwartz", "make_tube", "epsilon must lie in [0, 1]");
  return TubeSpec{epsilon, epsilon * g.rho};
}

double weyl_symmetry_defect(const SpectralFunction& a) {
  if (!a.symmetric())
    throw PreconditionError("schwartz", "weyl_symmetry_defect", "grid is not symmetric about 0");
  return 2.0 * a.odd_part();
}

MembershipReport image_membership(const GroupDatum&, const SpectralFunction& a,
                                  const MembershipBudget& budget) {
  MembershipReport rep;
  const auto& x = a.grid();
  const auto& y = a.values();
  const std::size_t n = x.size();

  CriterionReport weyl{"weyl", false, 0.0, budget.weyl_tol, 0.0};
  if (a.symmetric()) {
    for (std::size_t i = 0; i < n; ++i) {
      const double d = std::abs(y[i] - y[n - 1 - i]);
      if (d > weyl.value) weyl.value = d, weyl.witness = x[i];
    }
    weyl.passed = weyl.value <= budget.weyl_tol;
  } else {
    weyl.value = std::numeric_limits<double>::infinity();
  }
  rep.criteria.push_back(weyl);

  const double xmax = std::max(std::abs(x.front()), std::abs(x.back()));
  double sup_a = 0.0;
  for (const auto& v : y) sup_a = std::max(sup_a, std::abs(v));
  for (int order : budget.decay_orders) {
    CriterionReport bound{"decay_bound_N" + std::to_string(order), false, 0.0,
                          budget.decay_bound, 0.0};
    CriterionReport tail{"decay_tail_N" + std::to_string(order), false, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
      const double w = std::abs(y[i]) * std::pow(1.0 + std::abs(x[i]), order);
      if (w > bound.value) bound.value = w, bound.witness = x[i];
      if (std::abs(x[i]) >= 0.75 * xmax && w > tail.value) tail.value = w, tail.witness = x[i];
    }
    bound.passed = bound.value <= budget.decay_bound;
    tail.threshold = budget.tail_ratio * bound.value;
    tail.passed = bound.value == 0.0 || tail.value <= tail.threshold;
    rep.criteria.push_back(bound);
    rep.criteria.push_back(tail);
  }

  double factorial = 1.0;
  for (int k = 1; k <= budget.max_divided_order; ++k) {
    factorial *= k;
    CriterionReport smooth{"divided_difference_" + std::to_string(k), false, 0.0,
                           budget.smooth_bound * (1.0 + sup_a), 0.0};
    for (std::size_t j = 0; j + k < n; ++j) {
      const double d = std::abs(divided(x, y, j, k)) * factorial;
      if (d > smooth.value) smooth.value = d, smooth.witness = 0.5 * (x[j] + x[j + k]);
    }
    smooth.passed = smooth.value <= smooth.threshold;
    rep.criteria.push_back(smooth);
  }

  rep.passed = std::all_of(rep.criteria.begin(), rep.criteria.end(),
                           [](const CriterionReport& c) { return c.passed; });
  return rep;
}

TubeReport tube_extension_check(const GroupDatum& g, const RadialProfile& f, const TubeSpec& tube,
                                const specfun::QuadratureSpec& q) {
  if (!(tube.half_width >= 0.0))
    throw ValidationError("schwartz", "tube_extension_check", "half_width must be >= 0");
  const double need = g.rho + tube.half_width;
  if (!(f.decay.rate > need || (f.decay.rate == need && f.decay.poly < -2.0)))
    throw PreconditionError("schwartz", "tube_extension_check",
                            "profile decay rate " + std::to_string(f.decay.rate) +
                                " does not exceed (1 + epsilon) rho = " + std::to_string(need));
  TubeReport rep;
  rep.tube = tube;
  const double w = tube.half_width;
  const double ys[] = {-w, -0.5 * w, 0.0, 0.5 * w, w};
  for (double x = -2.0; x <= 2.0; x += 1.0)
    for (double y : ys) rep.points.emplace_back(x, y);
  rep.values.resize(rep.points.size());
  rep.err_est.resize(rep.points.size());
  detail::parallel_for(rep.points.size(), [&](std::size_t i) {
    const auto r = transform::hc_transform_at(g, f, rep.points[i], q);
    rep.values[i] = r.value;
    rep.err_est[i] = r.err_est;
  });
  std::vector<cplx> real(5);
  detail::parallel_for(real.size(), [&](std::size_t i) {
    real[i] = transform::hc_transform_at(g, f, static_cast<double>(i) - 2.0, q).value;
  });
  for (std::size_t i = 0; i < rep.points.size(); ++i) {
    const cplx v = rep.values[i];
    rep.finite = rep.finite && std::isfinite(v.real()) && std::isfinite(v.imag());
    rep.max_modulus = std::max(rep.max_modulus, std::abs(v));
    const std::size_t ix = i / 5, iy = i % 5;
    if (iy == 2)
      rep.real_axis_defect =
          std::max(rep.real_axis_defect, std::abs(v - real[ix]));
    const cplx mirror = rep.values[ix * 5 + (4 - iy)];
    rep.conjugacy_defect = std::max(rep.conjugacy_defect, std::abs(v - std::conj(mirror)));
  }
  return rep;
}

}  // namespace rankone::schwartz
