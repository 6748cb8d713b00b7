#include "rankone/transform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <string>
#include <unordered_map>

#include "rankone/cfunction.hpp"
#include "rankone/errors.hpp"
#include "rankone/parallel.hpp"

namespace rankone::transform {

using specfun::DecayBound;
using specfun::QuadResult;
using specfun::QuadratureSpec;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPanel = 0.25;
constexpr double kNuCap = 80.0;

void require_even(const SpectralFunction& a, const char* op) {
  if (!a.symmetric())
    throw PreconditionError("transform", op, "spectral grid is not symmetric about 0");
  const double odd = a.odd_part();
  if (odd > 1e-8)
    throw PreconditionError("transform", op,
                            "symbol is not Weyl-even (odd part " + std::to_string(odd) + ")");
}

void require_order(const SpectralFunction& a, double need, const char* op) {
  if (!(a.decay().order >= need))
    throw PreconditionError("transform", op,
                            "symbol decay order " + std::to_string(a.decay().order) +
                                " is below " + std::to_string(need));
}

// Last multiple of kPanel where |w(nu)| (1+nu) exceeds thresh, plus two panels.
double scan_cutoff(const std::function<double(double)>& w, double thresh) {
  double last = 0.0;
  for (double nu = kPanel; nu <= kNuCap; nu += kPanel)
    if (w(nu) * (1.0 + nu) > thresh) last = nu;
  return std::min(kNuCap, last + 2.0 * kPanel);
}

// Breakpoints on [0, V] for a nu-integral involving the given symbols.
std::vector<double> nu_breaks(const std::vector<const SpectralFunction*>& syms,
                              const GroupDatum& g, double thresh) {
  std::vector<double> breaks{0.0};
  bool sampled = false;
  double v = kInf;
  for (auto* s : syms)
    if (!s->has_exact()) {
      sampled = true;
      v = std::min(v, s->grid().back());
    }
  if (sampled) {
    for (auto* s : syms)
      if (!s->has_exact())
        for (double x : s->grid())
          if (x > 0.0 && x <= v) breaks.push_back(x);
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    return breaks;
  }
  auto w = [&](double nu) {
    double p = cfunction::plancherel_density(g, nu);
    for (auto* s : syms) p *= std::abs((*s)(nu));
    return p;
  };
  const double cut = scan_cutoff(w, thresh);
  for (double x = kPanel; x <= cut + 1e-12; x += kPanel) breaks.push_back(x);
  return breaks;
}

double fit_constant(const std::vector<double>& grid, const std::vector<cplx>& values,
                    double order) {
  double sup = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i)
    sup = std::max(sup, std::abs(values[i]) * std::pow(1.0 + std::abs(grid[i]), order));
  return 1.01 * sup;
}

}  // namespace

std::vector<double> default_grid() { return symmetric_grid(12.0, 481); }

QuadResult hc_transform_at(const GroupDatum& g, const RadialProfile& f, SpectralParameter lam,
                           const QuadratureSpec& q) {
  q.validate();
  const double y = std::abs(lam.imag());
  const double need = g.rho + y;
  const DecayBound& d = f.decay;
  if (!(d.rate > need || (d.rate == need && d.poly < -2.0)))
    throw PreconditionError("transform", "hc_transform",
                            "profile decay rate " + std::to_string(d.rate) +
                                " does not exceed rho + |Im lam| = " + std::to_string(need));
  const DecayBound env{d.c * spherical::xi_envelope(g), d.rate - need, d.poly + 1.0};
  auto integrand = [&](double t) {
    const double w = groups::haar_density(g, t);
    if (w == 0.0) return cplx(0.0);
    return f(t) * spherical::phi(g, lam, t) * w;
  };
  return specfun::integrate_halfline(integrand, env, q);
}

TransformResult hc_transform(const GroupDatum& g, const RadialProfile& f,
                             const std::vector<double>& grid, const QuadratureSpec& q) {
  q.validate();
  std::vector<cplx> values(grid.size());
  std::vector<double> err(grid.size());
  detail::parallel_for(grid.size(), [&](std::size_t i) {
    const QuadResult r = hc_transform_at(g, f, grid[i], q);
    values[i] = r.value;
    err[i] = r.err_est;
  });
  constexpr double order = 8.0;
  const SymbolDecay decay{fit_constant(grid, values, order), order, f.decay.rate - g.rho};
  return TransformResult{SpectralFunction(grid, std::move(values), decay), std::move(err), g};
}

QuadResult convolve_at_identity(const GroupDatum& g, const RadialProfile& f,
                                const RadialProfile& h, const QuadratureSpec& q) {
  q.validate();
  const double rate = f.decay.rate + h.decay.rate;
  const double poly = f.decay.poly + h.decay.poly;
  if (!(rate > 2.0 * g.rho || (rate == 2.0 * g.rho && poly < -1.0)))
    throw PreconditionError("transform", "convolve_at_identity",
                            "product of the profiles is not integrable against Haar measure");
  const DecayBound env{f.decay.c * h.decay.c, rate - 2.0 * g.rho, poly};
  auto integrand = [&](double t) {
    const double w = groups::haar_density(g, t);
    if (w == 0.0) return cplx(0.0);
    return f(t) * h(t) * w;
  };
  return specfun::integrate_halfline(integrand, env, q);
}

// ---------------------------------------------------------------------------

struct WavePacket::State {
  GroupDatum g;
  SpectralFunction a;
  std::vector<double> nodes;
  std::vector<cplx> weights;
  double cutoff = 0.0;
  double err = 0.0;

  std::once_flag decay_once;
  DecayBound decay;

  mutable std::mutex mu;
  mutable std::unordered_map<double, cplx> memo;

  // Composite rule on [0, V]; refine splits every panel into that many parts.
  void build(const QuadratureSpec& q, int refine, std::vector<double>& x,
             std::vector<cplx>& w) const {
    std::vector<double> breaks;
    int order;
    if (a.has_exact()) {
      for (double b = 0.0; b <= cutoff + 1e-12; b += kPanel) breaks.push_back(b);
      order = q.order;
    } else {
      breaks.push_back(0.0);
      for (double b : a.grid())
        if (b > 0.0) breaks.push_back(b);
      order = 8;
    }
    const auto& rule = specfun::gauss_legendre(order);
    const double cp = g.plancherel_constant;
    for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
      const double h = (breaks[p + 1] - breaks[p]) / refine;
      for (int r = 0; r < refine; ++r) {
        const double lo = breaks[p] + r * h;
        for (int k = 0; k < order; ++k) {
          const double nu = lo + 0.5 * h * (rule.nodes[k] + 1.0);
          x.push_back(nu);
          w.push_back(cp * 0.5 * h * rule.weights[k] * a(nu) *
                      cfunction::plancherel_density(g, nu));
        }
      }
    }
  }

  // Sums below the rounding floor of their own terms are returned as zero.
  cplx sum(const std::vector<double>& x, const std::vector<cplx>& w, double t) const {
    std::vector<cplx> terms(x.size());
    double floor = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      terms[j] = w[j] * spherical::phi(g, x[j], t);
      floor += std::abs(terms[j]);
    }
    const cplx v = specfun::pairwise_sum(terms);
    floor *= 64.0 * std::numeric_limits<double>::epsilon();
    return std::abs(v) <= floor ? cplx(0.0) : v;
  }

  cplx value(double t) const {
    t = std::abs(t);
    {
      std::lock_guard lock(mu);
      if (auto it = memo.find(t); it != memo.end()) return it->second;
    }
    const cplx v = sum(nodes, weights, t);
    std::lock_guard lock(mu);
    memo.emplace(t, v);
    return v;
  }
};

WavePacket::WavePacket(const GroupDatum& g, const SpectralFunction& a, const QuadratureSpec& q)
    : state_(std::make_shared<State>()) {
  q.validate();
  require_even(a, "wave_packet");
  require_order(a, 4.0, "wave_packet");
  auto& s = *state_;
  s.g = g;
  s.a = a;
  if (a.has_exact()) {
    auto w = [&](double nu) { return std::abs(a(nu)) * cfunction::plancherel_density(g, nu); };
    s.cutoff = scan_cutoff(w, 1e-3 * q.abs_tol);
  } else {
    s.cutoff = a.grid().back();
  }
  s.build(q, 1, s.nodes, s.weights);
  std::vector<double> x2;
  std::vector<cplx> w2;
  s.build(q, 2, x2, w2);
  for (double t : {0.0, 5.0, 20.0})
    s.err = std::max(s.err, std::abs(s.sum(s.nodes, s.weights, t) - s.sum(x2, w2, t)));
}

cplx WavePacket::operator()(double t) const { return state_->value(t); }

double WavePacket::err_est() const { return state_->err; }
double WavePacket::cutoff() const { return state_->cutoff; }
std::size_t WavePacket::nodes() const { return state_->nodes.size(); }

RadialProfile WavePacket::profile() const {
  auto st = state_;
  std::call_once(st->decay_once, [&] {
    const GroupDatum& g = st->g;
    const double strip = st->a.decay().strip;
    if (!(strip > 0.0)) {
      // Only the trivial bound |psi| <= (int |a| dmu) Xi is available.
      double abs_mass = 0.0;
      for (const auto& w : st->weights) abs_mass += std::abs(w);
      st->decay = DecayBound{1.01 * abs_mass * spherical::xi_envelope(g), g.rho, 1.0};
      return;
    }
    const double eta = std::min(strip / 2.0, g.rho + 1.0);
    const double rate = g.rho + eta;
    double sup = 0.0;
    for (double t = 0.0; t <= 12.0; t += 0.25)
      sup = std::max(sup, std::abs(st->value(t)) * std::exp(rate * t));
    st->decay = DecayBound{2.0 * sup, rate, 0.0};
  });
  RadialProfile p;
  p.eval = [st](double t) { return st->value(t); };
  p.decay = st->decay;
  p.smoothness = RadialProfile::kAnalytic;
  p.label = "wave_packet";
  return p;
}

cplx wave_packet(const GroupDatum& g, const SpectralFunction& a, double t,
                 const QuadratureSpec& q) {
  return WavePacket(g, a, q)(t);
}

double calibrate(const GroupDatum& g, const QuadratureSpec& q) {
  GroupDatum unit = g;
  unit.plancherel_constant = 1.0;
  auto gauss = [](double lam) { return cplx(std::exp(-lam * lam)); };
  const SymbolDecay decay{fit_symbol_constant(gauss, 8.0), 8.0, kInf};
  const auto a0 = SpectralFunction::from_function(default_grid(), gauss, decay);
  const WavePacket psi(unit, a0, q);
  const QuadResult h = hc_transform_at(unit, psi.profile(), 1.0, q);
  return std::exp(-1.0) / h.value.real();
}

QuadResult plancherel_pairing(const GroupDatum& g, const SpectralFunction& a,
                              const SpectralFunction& b, const QuadratureSpec& q) {
  q.validate();
  require_even(a, "plancherel_pairing");
  require_even(b, "plancherel_pairing");
  require_order(a, 4.0, "plancherel_pairing");
  require_order(b, 4.0, "plancherel_pairing");
  const auto breaks = nu_breaks({&a, &b}, g, 1e-3 * q.abs_tol);
  auto integrand = [&](double nu) {
    return a(nu) * b(nu) * cfunction::plancherel_density(g, nu);
  };
  QuadResult r = specfun::integrate_breakpoints(integrand, breaks, q);
  r.value *= g.plancherel_constant;
  r.err_est *= g.plancherel_constant;
  return r;
}

cplx expansion_term(const GroupDatum& g, CartanClass cls, const RadialProfile& f,
                    SpectralParameter lam, double eps, const QuadratureSpec& q) {
  if (!(eps > 0.0 && eps <= 1.0))
    throw DomainError("transform", "expansion_term", "eps must lie in (0, 1]");
  if (lam.imag() != 0.0)
    throw DomainError("transform", "expansion_term", "lam must be real");
  if (cls == CartanClass::compact) return 0.0;
  const double l = std::abs(lam.real());
  const double lo = std::max(0.0, l - 8.0 * eps);
  const double hi = l + 8.0 * eps;
  auto bump = [&](double nu) {
    const double s = 2.0 * eps * eps;
    return std::exp(-(nu - l) * (nu - l) / s) + std::exp(-(nu + l) * (nu + l) / s);
  };
  auto mass = [&](double nu) { return cplx(bump(nu) * cfunction::plancherel_density(g, nu)); };
  auto moment = [&](double nu) {
    return hc_transform_at(g, f, nu, q).value * bump(nu) * cfunction::plancherel_density(g, nu);
  };
  const QuadResult z = specfun::integrate_interval(mass, lo, hi, q, 4);
  const QuadResult m = specfun::integrate_interval(moment, lo, hi, q, 4);
  return m.value / z.value;
}

cplx casimir_radial(const GroupDatum& g, const RadialProfile& p, double t) {
  if (!(t > 0.0)) throw DomainError("transform", "casimir_radial", "t must be positive");
  return radial_derivative(p, t, 2) + groups::haar_log_derivative(g, t) * radial_derivative(p, t, 1);
}

SpectralFunction spectral_multiplier(const SpectralFunction& a,
                                     const std::function<cplx(double)>& m, double degree) {
  const auto& grid = a.grid();
  double sup = 0.0;
  for (double x : grid) sup = std::max(sup, std::abs(m(x)) / std::pow(1.0 + std::abs(x), degree));
  const SymbolDecay d{a.decay().c * sup, a.decay().order - degree, a.decay().strip};
  if (a.has_exact()) {
    auto ex = a.exact();
    return SpectralFunction::from_function(grid, [ex, m](double x) { return ex(x) * m(x); }, d);
  }
  std::vector<cplx> v(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) v[i] = a.values()[i] * m(grid[i]);
  return SpectralFunction(grid, std::move(v), d);
}

std::function<cplx(double)> casimir_symbol(const GroupDatum& g) {
  const double r2 = g.rho * g.rho;
  return [r2](double lam) { return cplx(-(lam * lam + r2)); };
}

}  // namespace rankone::transform
