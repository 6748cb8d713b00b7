#include "rankone/cfunction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rankone/errors.hpp"

namespace rankone::cfunction {

namespace {

bool is_pole(cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// log c(lam); caller guarantees that i lam is not a pole of Gamma.
cplx log_c(const GroupDatum& g, cplx lam) {
  const cplx il = cplx(0.0, 1.0) * lam;
  return (g.rho - il) * std::numbers::ln2 + specfun::log_gamma(g.jacobi_alpha + 1.0) +
         specfun::log_gamma(il) - specfun::log_gamma(0.5 * (g.rho + il)) -
         specfun::log_gamma(0.5 * (g.jacobi_alpha - g.jacobi_beta + 1.0 + il));
}

}  // namespace

cplx c_function(const GroupDatum& g, SpectralParameter lam) {
  const cplx il = cplx(0.0, 1.0) * lam;
  if (is_pole(il))
    throw PoleError("cfunction", "c_function", static_cast<long long>(il.real()),
                    "Gamma(i lam) has a pole");
  if (is_pole(0.5 * (g.rho + il)) ||
      is_pole(0.5 * (g.jacobi_alpha - g.jacobi_beta + 1.0 + il)))
    return 0.0;
  return std::exp(log_c(g, lam));
}

double plancherel_density(const GroupDatum& g, double lam) {
  if (lam == 0.0) return 0.0;
  return std::exp(-2.0 * log_c(g, lam).real());
}

PlancherelDensity density_of(const GroupDatum& g) {
  return {g, [g](double lam) { return plancherel_density(g, lam); }, true};
}

double aggregate_density(const GroupDatum& g, double nu) {
  constexpr double compact_class = 0.0;
  return g.plancherel_constant * plancherel_density(g, nu) + compact_class;
}

AsymptoticFit asymptotic_c_fit(const GroupDatum& g, double lam, double window_start) {
  if (!(std::exp(-2.0 * g.rho * window_start) < 1e-10))
    throw PreconditionError("cfunction", "asymptotic_c_oracle",
                            "window start too small: need exp(-2 rho T) < 1e-10");
  if (lam == 0.0)
    throw ConditioningError("cfunction", "asymptotic_c_oracle", "lam = 0 has no two-exponential fit");

  constexpr int kPoints = 81;
  constexpr double kWidth = 10.0;
  const bool use_integral = g.m_2alpha == 0;
  std::vector<double> ts(kPoints);
  std::vector<cplx> ys(kPoints);
  double ymax = 0.0;
  for (int j = 0; j < kPoints; ++j) {
    const double t = window_start + kWidth * j / (kPoints - 1);
    const cplx v = use_integral ? spherical::phi_integral_oracle(g, lam, t)
                                : spherical::phi(g, lam, t);
    ts[j] = t;
    ys[j] = v * std::exp(g.rho * t);
    ymax = std::max(ymax, std::abs(ys[j]));
  }

  // Normal equations for basis u = e^{i lam t}, v = conj(u).
  cplx g12 = 0.0, r1 = 0.0, r2 = 0.0;
  for (int j = 0; j < kPoints; ++j) {
    const cplx u = std::polar(1.0, lam * ts[j]);
    g12 += std::conj(u) * std::conj(u);
    r1 += std::conj(u) * ys[j];
    r2 += u * ys[j];
  }
  const double n = kPoints;
  const double cond = (n + std::abs(g12)) / (n - std::abs(g12));
  if (!(cond < 1e6))
    throw ConditioningError("cfunction", "asymptotic_c_oracle",
                            "two-exponential fit is ill-conditioned (lam too small)", 0.0, cond);
  const cplx det = n * n - g12 * std::conj(g12);
  AsymptoticFit fit;
  fit.c_plus = (n * r1 - g12 * r2) / det;
  fit.c_minus = (n * r2 - std::conj(g12) * r1) / det;
  fit.condition = cond;

  double res = 0.0;
  for (int j = 0; j < kPoints; ++j) {
    const cplx model = fit.c_plus * std::polar(1.0, lam * ts[j]) +
                       fit.c_minus * std::polar(1.0, -lam * ts[j]);
    res = std::max(res, std::abs(ys[j] - model));
  }
  fit.residual = res / ymax;
  if (!(fit.residual < 1e-6))
    throw AccuracyError("cfunction", "asymptotic_c_oracle", "fit residual above 1e-6",
                        std::abs(fit.c_plus), fit.residual);
  return fit;
}

cplx asymptotic_c_oracle(const GroupDatum& g, double lam, double window_start) {
  return asymptotic_c_fit(g, lam, window_start).c_plus;
}

}  // namespace rankone::cfunction
