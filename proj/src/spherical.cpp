#include "rankone/spherical.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <utility>
#include <vector>

#include "rankone/errors.hpp"

namespace rankone {

cplx radial_derivative(const RadialProfile& p, double t, int k) {
  if (k == 0) return p(t);
  const double h = kDerivativeStep;
  if (k == 1) {
    if (p.d1) return t < 0.0 ? -p.d1(-t) : p.d1(t);
    return (p(t + h) - p(t - h)) / (2.0 * h);
  }
  if (k == 2) {
    if (p.d2) return p.d2(std::abs(t));
    return (p(t + h) - 2.0 * p(t) + p(t - h)) / (h * h);
  }
  throw DomainError("spherical", "radial_derivative", "derivative order must be <= 2");
}

double decay_ratio(const RadialProfile& p, double t_max) {
  double worst = 0.0;
  constexpr int kPoints = 200;
  for (int i = 0; i <= kPoints; ++i) {
    const double t = 1e-3 * std::pow(t_max / 1e-3, static_cast<double>(i) / kPoints);
    const double bound = p.decay(t);
    const double v = std::abs(p(t));
    if (v == 0.0) continue;
    worst = std::max(worst, bound > 0.0 ? v / bound : std::numeric_limits<double>::infinity());
  }
  return worst;
}

namespace spherical {

namespace {

struct JacobiArgs {
  cplx a, b, c;
  double x;
};

JacobiArgs jacobi_args(const GroupDatum& g, SpectralParameter lam, double t, const char* op) {
  if (!(t >= 0.0)) throw DomainError("spherical", op, "t must be >= 0");
  const double s = std::sinh(t);
  const double x = -s * s;
  if (!std::isfinite(x)) throw DomainError("spherical", op, "t too large (sinh^2 t overflows)");
  const cplx i(0.0, 1.0);
  return {0.5 * (g.rho + i * lam), 0.5 * (g.rho - i * lam), g.jacobi_alpha + 1.0, x};
}

}  // namespace

cplx phi(const GroupDatum& g, SpectralParameter lam, double t) {
  if (t == 0.0) return 1.0;
  const auto [a, b, c, x] = jacobi_args(g, lam, t, "phi");
  return specfun::gauss_2f1(a, b, c, x);
}

cplx phi_derivative(const GroupDatum& g, SpectralParameter lam, double t) {
  if (t == 0.0) return 0.0;
  const auto [a, b, c, x] = jacobi_args(g, lam, t, "phi_derivative");
  return a * b / c * specfun::gauss_2f1(a + 1.0, b + 1.0, c + 1.0, x) * (-std::sinh(2.0 * t));
}

cplx phi_second_derivative(const GroupDatum& g, SpectralParameter lam, double t) {
  if (t == 0.0) {
    const cplx ev = lam * lam + g.rho * g.rho;
    return -ev / (2.0 * g.jacobi_alpha + 2.0);
  }
  const auto [a, b, c, x] = jacobi_args(g, lam, t, "phi_second_derivative");
  const double s2 = std::sinh(2.0 * t);
  const cplx f1 = specfun::gauss_2f1(a + 1.0, b + 1.0, c + 1.0, x);
  const cplx f2 = specfun::gauss_2f1(a + 2.0, b + 2.0, c + 2.0, x);
  return a * b / c * ((a + 1.0) * (b + 1.0) / (c + 1.0) * f2 * s2 * s2 - 2.0 * std::cosh(2.0 * t) * f1);
}

cplx phi_integral_oracle(const GroupDatum& g, SpectralParameter lam, double t) {
  if (g.m_2alpha != 0)
    throw CapabilityError("spherical", "phi_integral_oracle",
                          "integral representation implemented only for m_2alpha = 0 (preset " +
                              g.name + ")");
  if (!(t >= 0.0)) throw DomainError("spherical", "phi_integral_oracle", "t must be >= 0");
  if (t == 0.0) return 1.0;

  const int sphere_power = g.m_alpha - 1;  // n - 2
  const cplx expo = -(cplx(0.0, 1.0) * lam + g.rho);
  auto integrand = [&](double th) -> cplx {
    const double s = std::sin(0.5 * th);
    const double c = std::cos(0.5 * th);
    // log(e^t s^2 + e^{-t} c^2)
    const double log_base = t + std::log(s * s + std::exp(-2.0 * t) * c * c);
    return std::exp(expo * log_base) * std::pow(std::sin(th), sphere_power);
  };

  std::vector<double> breaks{0.0};
  for (double b = std::exp(-t); b < std::numbers::pi; b *= 2.0) breaks.push_back(b);
  breaks.push_back(std::numbers::pi);

  specfun::QuadratureSpec q;
  q.rel_tol = 1e-13;
  q.abs_tol = 1e-300;
  q.max_subdivisions = 1 << 16;
  const cplx total = specfun::integrate_breakpoints(integrand, breaks, q).value;

  // int_0^pi sin^k = sqrt(pi) Gamma((k+1)/2) / Gamma(k/2 + 1)
  const double k = sphere_power;
  const double mass = std::sqrt(std::numbers::pi) * std::exp(std::lgamma(0.5 * (k + 1.0)) -
                                                              std::lgamma(0.5 * k + 1.0));
  return total / mass;
}

double xi(const GroupDatum& g, double t) { return phi(g, 0.0, std::abs(t)).real(); }

double xi_envelope(const GroupDatum& g) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, double> cache;
  const std::pair key{g.m_alpha, g.m_2alpha};
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  double sup = 0.0;
  for (double t = 0.0; t <= 60.0; t += 0.25)
    sup = std::max(sup, xi(g, t) * std::exp(g.rho * t) / (1.0 + t));
  const double k = 1.05 * sup;
  std::lock_guard lock(mu);
  cache.emplace(key, k);
  return k;
}

double sigma(double t) { return std::abs(t); }

RadialProfile phi_profile(const GroupDatum& g, SpectralParameter lam) {
  RadialProfile p;
  p.eval = [g, lam](double t) { return phi(g, lam, t); };
  p.d1 = [g, lam](double t) { return phi_derivative(g, lam, t); };
  p.d2 = [g, lam](double t) { return phi_second_derivative(g, lam, t); };
  p.decay = {xi_envelope(g), g.rho - std::abs(lam.imag()), 1.0};
  p.smoothness = RadialProfile::kAnalytic;
  p.label = "phi";
  return p;
}

}  // namespace spherical
}  // namespace rankone
