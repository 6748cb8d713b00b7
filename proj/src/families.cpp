#include "rankone/families.hpp"

#include <cmath>
#include <limits>

#include "rankone/errors.hpp"

namespace rankone::families {

namespace {

constexpr double kRate = 5.0;
constexpr double kInf = std::numeric_limits<double>::infinity();

double sampled_constant(const std::function<double(double)>& f, double rate) {
  double sup = 0.0;
  for (double t = 0.0; t <= 60.0; t += 1.0 / 64.0) sup = std::max(sup, f(t) * std::exp(rate * t));
  return 1.01 * sup;
}

SpectralFunction entire(const std::vector<double>& grid, std::function<cplx(double)> a) {
  const double c = fit_symbol_constant(a, 8.0);
  return SpectralFunction::from_function(grid, std::move(a), SymbolDecay{c, 8.0, kInf});
}

}  // namespace

RadialProfile gaussian(double s) {
  if (!(s > 0.0)) throw ValidationError("families", "gaussian", "s must be positive");
  RadialProfile p;
  p.eval = [s](double t) { return cplx(std::exp(-s * t * t)); };
  p.d1 = [s](double t) { return cplx(-2.0 * s * t * std::exp(-s * t * t)); };
  p.d2 = [s](double t) { return cplx((4.0 * s * s * t * t - 2.0 * s) * std::exp(-s * t * t)); };
  p.decay = {std::exp(kRate * kRate / (4.0 * s)), kRate, 0.0};
  p.smoothness = RadialProfile::kAnalytic;
  p.label = "gaussian";
  return p;
}

RadialProfile poly_gaussian(double s) {
  if (!(s > 0.0)) throw ValidationError("families", "poly_gaussian", "s must be positive");
  RadialProfile p;
  p.eval = [s](double t) { return cplx((1.0 + t * t) * std::exp(-s * t * t)); };
  p.d1 = [s](double t) {
    return cplx((2.0 * t - 2.0 * s * t * (1.0 + t * t)) * std::exp(-s * t * t));
  };
  p.d2 = [s](double t) {
    const double e = std::exp(-s * t * t);
    const double d1 = 2.0 * t - 2.0 * s * t - 2.0 * s * t * t * t;
    return cplx(e * (-2.0 * s * t * d1 + 2.0 - 2.0 * s - 6.0 * s * t * t));
  };
  p.decay = {sampled_constant([s](double t) { return (1.0 + t * t) * std::exp(-s * t * t); }, kRate),
             kRate, 0.0};
  p.smoothness = RadialProfile::kAnalytic;
  p.label = "poly_gaussian";
  return p;
}

RadialProfile sech_power(const GroupDatum& g, double k) {
  if (k == 0.0) k = 2.0 * g.rho + 1.0;
  if (!(k > 0.0)) throw ValidationError("families", "sech_power", "k must be positive");
  RadialProfile p;
  p.eval = [k](double t) { return cplx(std::pow(std::cosh(t), -k)); };
  p.d1 = [k](double t) { return cplx(-k * std::tanh(t) * std::pow(std::cosh(t), -k)); };
  p.d2 = [k](double t) {
    const double th = std::tanh(t);
    const double c = std::cosh(t);
    return cplx(std::pow(c, -k) * (k * k * th * th - k / (c * c)));
  };
  p.decay = {std::pow(2.0, k), k, 0.0};
  p.smoothness = RadialProfile::kAnalytic;
  p.label = "sech";
  return p;
}

RadialProfile xi_weighted(const GroupDatum& g, double pw) {
  RadialProfile p;
  p.eval = [g, pw](double t) { return cplx(spherical::xi(g, t) * std::pow(1.0 + t, -pw)); };
  p.d1 = [g, pw](double t) {
    const double x = spherical::xi(g, t);
    const double x1 = spherical::phi_derivative(g, 0.0, t).real();
    return cplx(x1 * std::pow(1.0 + t, -pw) - pw * x * std::pow(1.0 + t, -pw - 1.0));
  };
  p.d2 = [g, pw](double t) {
    const double x = spherical::xi(g, t);
    const double x1 = spherical::phi_derivative(g, 0.0, t).real();
    const double x2 = spherical::phi_second_derivative(g, 0.0, t).real();
    return cplx(x2 * std::pow(1.0 + t, -pw) - 2.0 * pw * x1 * std::pow(1.0 + t, -pw - 1.0) +
                pw * (pw + 1.0) * x * std::pow(1.0 + t, -pw - 2.0));
  };
  p.decay = {spherical::xi_envelope(g), g.rho, 1.0 - pw};
  p.smoothness = RadialProfile::kAnalytic;
  p.label = "xi_weighted";
  return p;
}

const std::vector<std::string>& profile_names() {
  static const std::vector<std::string> names{"gaussian", "poly_gaussian", "sech"};
  return names;
}

RadialProfile profile_by_name(const GroupDatum& g, const std::string& name) {
  if (name == "gaussian") return gaussian();
  if (name == "poly_gaussian") return poly_gaussian();
  if (name == "sech") return sech_power(g);
  throw ValidationError("families", "profile",
                        "unknown profile '" + name + "' (valid: gaussian, poly_gaussian, sech)");
}

std::vector<RadialProfile> test_profiles(const GroupDatum& g) {
  std::vector<RadialProfile> out;
  for (const auto& n : profile_names()) out.push_back(profile_by_name(g, n));
  return out;
}

const std::vector<std::string>& symbol_names() {
  static const std::vector<std::string> names{"gauss", "lam2_gauss", "wide_gauss",
                                              "shifted_gauss", "quartic"};
  return names;
}

SpectralFunction symbol_by_name(const std::string& name, const std::vector<double>& grid) {
  if (name == "gauss") return entire(grid, [](double l) { return cplx(std::exp(-l * l)); });
  if (name == "lam2_gauss")
    return entire(grid, [](double l) { return cplx(l * l * std::exp(-l * l)); });
  if (name == "wide_gauss")
    return entire(grid, [](double l) { return cplx(std::exp(-l * l / 4.0)); });
  if (name == "shifted_gauss")
    return entire(grid, [](double l) { return cplx((1.0 + l * l) * std::exp(-l * l)); });
  if (name == "quartic")
    return entire(grid, [](double l) { return cplx(std::exp(-l * l * l * l / 8.0)); });
  std::string valid;
  for (const auto& n : symbol_names()) valid += (valid.empty() ? "" : ", ") + n;
  throw ValidationError("families", "symbol", "unknown symbol '" + name + "' (valid: " + valid + ")");
}

SpectralFunction odd_symbol(const std::vector<double>& grid) {
  auto a = [](double l) { return cplx(l * std::exp(-l * l)); };
  return SpectralFunction::from_function(grid, a, SymbolDecay{fit_symbol_constant(a, 8.0), 8.0, kInf});
}

SpectralFunction rational_symbol(const std::vector<double>& grid) {
  auto a = [](double l) { return cplx(1.0 / (1.0 + l * l)); };
  return SpectralFunction::from_function(grid, a, SymbolDecay{1.0, 2.0, 1.0});
}

SpectralFunction rough_symbol(const std::vector<double>& grid) {
  auto a = [](double l) { return cplx((1.0 + std::abs(l)) * std::exp(-l * l)); };
  return SpectralFunction::from_function(grid, a, SymbolDecay{fit_symbol_constant(a, 8.0), 8.0, 0.0});
}

}  // namespace rankone::families
