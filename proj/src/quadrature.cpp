#include "rankone/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <queue>
#include <string>

#include "rankone/errors.hpp"

namespace rankone::specfun {

double DecayBound::operator()(double t) const {
  return c * std::pow(1.0 + t, poly) * std::exp(-rate * t);
}

double DecayBound::tail(double t) const {
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (rate <= 0.0) {
    if (rate == 0.0 && poly < -1.0) return c * std::pow(1.0 + t, poly + 1.0) / (-poly - 1.0);
    return inf;
  }
  if (poly <= 0.0) return (*this)(t) / rate;
  const double slack = rate - poly / (1.0 + t);
  if (slack <= 0.0) return inf;
  return (*this)(t) / slack;
}

void QuadratureSpec::validate() const {
  auto fail = [](const std::string& what) {
    throw ValidationError("specfun", "QuadratureSpec", what);
  };
  if (!(rel_tol >= 1e-14)) fail("rel_tol must be >= 1e-14");
  if (!(abs_tol > 0.0)) fail("abs_tol must be positive");
  if (max_subdivisions < 1 || max_subdivisions > (1 << 20))
    fail("max_subdivisions must lie in [1, 2^20]");
  if (order < 2 || order > 64) fail("order must lie in [2, 64]");
  if (!(truncation.tail_fraction > 0.0) || !(truncation.step > 0.0) ||
      !(truncation.t_cap > 0.0))
    fail("truncation policy values must be positive");
}

const GaussRule& gauss_legendre(int order) {
  static std::mutex mu;
  static std::map<int, GaussRule> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(order); it != cache.end()) return it->second;

  GaussRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const int n = order;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    {
      // Final derivative at the converged node.
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return cache.emplace(order, std::move(rule)).first->second;
}

cplx pairwise_sum(std::span<const cplx> values) {
  if (values.size() <= 8) {
    cplx s = 0.0;
    for (const auto& v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

namespace {

struct GaussValue {
  cplx value;
  double absint;
};

GaussValue gauss_panel(const Integrand& f, double a, double b, const GaussRule& rule) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  cplx s = 0.0;
  double as = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const cplx v = f(mid + half * rule.nodes[i]);
    s += rule.weights[i] * v;
    as += rule.weights[i] * std::abs(v);
  }
  return {s * half, as * half};
}

struct Panel {
  double a, b;
  cplx whole;  // one rule on [a, b]
  GaussValue left, right;
  double err;
  bool at_floor;

  cplx value() const { return left.value + right.value; }
  double absint() const { return left.absint + right.absint; }
};

Panel make_panel(const Integrand& f, double a, double b, cplx whole,
                 const GaussRule& rule) {
  const double m = 0.5 * (a + b);
  Panel p{a, b, whole, gauss_panel(f, a, m, rule), gauss_panel(f, m, b, rule), 0.0, false};
  const double raw = std::abs(p.whole - p.value());
  const double floor = 64.0 * std::numeric_limits<double>::epsilon() *
                       (p.left.absint + p.right.absint);
  p.at_floor = raw <= floor;
  p.err = std::max(raw, floor);
  if (!std::isfinite(raw)) p.at_floor = false;
  return p;
}

}  // namespace

QuadResult integrate_breakpoints(const Integrand& f, std::span<const double> breaks,
                                 const QuadratureSpec& q) {
  if (breaks.size() < 2)
    throw DomainError("specfun", "integrate_interval", "need at least two breakpoints");
  for (std::size_t i = 1; i < breaks.size(); ++i)
    if (!(breaks[i] > breaks[i - 1]) || !std::isfinite(breaks[i]))
      throw DomainError("specfun", "integrate_interval",
                        "breakpoints must be finite and strictly increasing");

  const GaussRule& rule = gauss_legendre(q.order);
  std::vector<Panel> panels;
  panels.reserve(breaks.size() * 2);
  auto cmp = [&panels](std::size_t i, std::size_t j) { return panels[i].err < panels[j].err; };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(cmp)> queue(cmp);

  cplx total = 0.0;
  double total_err = 0.0;
  double total_abs = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const cplx whole = gauss_panel(f, breaks[i], breaks[i + 1], rule).value;
    panels.push_back(make_panel(f, breaks[i], breaks[i + 1], whole, rule));
    total += panels.back().value();
    total_err += panels.back().err;
    total_abs += panels.back().absint();
    if (!panels.back().at_floor) queue.push(panels.size() - 1);
  }

  // The relative tolerance is taken against int |f|: cancellation below
  // rel_tol times that scale is not resolvable from noisy integrands.
  while (total_err > std::max(q.abs_tol, q.rel_tol * total_abs) && !queue.empty()) {
    if (static_cast<int>(panels.size()) >= q.max_subdivisions)
      throw AccuracyError("specfun", "integrate_interval",
                          "subdivision budget exhausted (" +
                              std::to_string(q.max_subdivisions) + " panels)",
                          std::abs(total), total_err);
    const std::size_t idx = queue.top();
    queue.pop();
    const Panel worst = panels[idx];
    const double m = 0.5 * (worst.a + worst.b);
    Panel left = make_panel(f, worst.a, m, worst.left.value, rule);
    Panel right = make_panel(f, m, worst.b, worst.right.value, rule);
    total += left.value() + right.value() - worst.value();
    total_err += left.err + right.err - worst.err;
    total_abs += left.absint() + right.absint() - worst.absint();
    panels[idx] = left;
    if (!left.at_floor) queue.push(idx);
    panels.push_back(right);
    if (!right.at_floor) queue.push(panels.size() - 1);
  }

  std::sort(panels.begin(), panels.end(),
            [](const Panel& x, const Panel& y) { return x.a < y.a; });
  std::vector<cplx> values;
  values.reserve(panels.size());
  double err = 0.0;
  for (const auto& p : panels) {
    values.push_back(p.value());
    err += p.err;
  }
  const cplx value = pairwise_sum(values);
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
    throw AccuracyError("specfun", "integrate_interval", "non-finite integrand value");
  return {value, err};
}

QuadResult integrate_interval(const Integrand& f, double lo, double hi,
                              const QuadratureSpec& q, int initial_panels) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
    throw DomainError("specfun", "integrate_interval", "requires finite lo < hi");
  initial_panels = std::max(1, initial_panels);
  std::vector<double> breaks(initial_panels + 1);
  for (int i = 0; i <= initial_panels; ++i)
    breaks[i] = lo + (hi - lo) * static_cast<double>(i) / initial_panels;
  breaks.back() = hi;
  return integrate_breakpoints(f, breaks, q);
}

double truncation_cutoff(const DecayBound& decay, const QuadratureSpec& q) {
  const auto& pol = q.truncation;
  const double target = pol.tail_fraction * q.abs_tol;
  for (double t = pol.step; t < pol.t_cap; t += pol.step)
    if (decay.tail(t) <= target) return t;
  return pol.t_cap;
}

QuadResult integrate_halfline(const Integrand& f, const DecayBound& decay,
                              const QuadratureSpec& q) {
  if (!(decay.rate > 0.0) && !(decay.rate == 0.0 && decay.poly < -1.0))
    throw DomainError("specfun", "integrate_halfline",
                      "decay hint is not integrable on the half line");
  const double cut = truncation_cutoff(decay, q);
  const int panels = std::max(1, static_cast<int>(std::ceil(cut)));
  QuadResult r = integrate_interval(f, 0.0, cut, q, panels);
  r.err_est += decay.tail(cut);
  return r;
}

}  // namespace rankone::specfun
