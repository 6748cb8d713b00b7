#include "rankone/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "rankone/errors.hpp"

namespace rankone::specfun {

namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos coefficients, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

cplx log_gamma_right(cplx z) {
  z -= 1.0;
  cplx x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i)
    x += kLanczos[i] / (z + static_cast<double>(i));
  const cplx t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

// Sum of the (optionally regularized) hypergeometric series in z, |z| <= 1/2.
cplx series_2f1(cplx a, cplx b, cplx c, double z, bool regularized) {
  constexpr int kMaxTerms = 20000;
  constexpr double kStop = 1e-17;
  int k = 0;
  cplx term;
  if (regularized) {
    if (is_nonpositive_integer(c)) {
      // Leading terms vanish up to k0 = 1 - c, where Gamma(c + k0) = 1.
      const int k0 = 1 - static_cast<int>(c.real());
      term = 1.0;
      for (int j = 0; j < k0; ++j)
        term *= (a + static_cast<double>(j)) * (b + static_cast<double>(j)) * z /
                static_cast<double>(j + 1);
      k = k0;
    } else {
      term = rgamma(c);
    }
  } else {
    term = 1.0;
  }
  cplx sum = term;
  double max_term = std::abs(term);
  int quiet = 0;
  for (; k < kMaxTerms; ++k) {
    const double kd = static_cast<double>(k);
    term *= (a + kd) * (b + kd) * z / ((c + kd) * (kd + 1.0));
    sum += term;
    const double at = std::abs(term);
    max_term = std::max(max_term, at);
    if (at == 0.0) return sum;
    if (at <= kStop * std::abs(sum) || at <= 1e-33 * max_term) {
      if (++quiet == 2) return sum;
    } else {
      quiet = 0;
    }
  }
  throw AccuracyError("specfun", "gauss_2f1",
                      "hypergeometric series did not converge in " +
                          std::to_string(kMaxTerms) + " terms",
                      std::abs(sum), std::abs(term));
}

// Connection formula about x = -inf, valid when b - a is not an integer.
cplx connection_2f1(cplx a, cplx b, cplx c, double log1mx, double w) {
  const cplx d = b - a;
  const cplx lc = log_gamma(c);
  const double log_pi = std::log(kPi);
  cplx out = 0.0;
  if (!is_nonpositive_integer(b) && !is_nonpositive_integer(c - a)) {
    const cplx pref = std::exp(lc + log_pi - log_sin_pi(d) - log_gamma(b) -
                               log_gamma(c - a) - a * log1mx);
    out += pref * series_2f1(a, c - b, 1.0 - d, w, true);
  }
  if (!is_nonpositive_integer(a) && !is_nonpositive_integer(c - b)) {
    const cplx pref = std::exp(lc + log_pi - log_sin_pi(-d) - log_gamma(a) -
                               log_gamma(c - b) - b * log1mx);
    out += pref * series_2f1(b, c - a, 1.0 + d, w, true);
  }
  return out;
}

}  // namespace

cplx log_gamma(cplx z) {
  if (is_nonpositive_integer(z))
    throw PoleError("specfun", "log_gamma", static_cast<long long>(z.real()),
                    "pole of Gamma at " + std::to_string(static_cast<long long>(z.real())));
  if (z.real() >= 0.5) return log_gamma_right(z);
  return std::log(kPi) - log_sin_pi(z) - log_gamma_right(1.0 - z);
}

cplx rgamma(cplx z) {
  if (is_nonpositive_integer(z)) return 0.0;
  return std::exp(-log_gamma(z));
}

cplx log_sin_pi(cplx z) {
  if (z.imag() == 0.0 && z.real() == std::floor(z.real()))
    throw PoleError("specfun", "log_sin_pi", static_cast<long long>(z.real()),
                    "sin(pi z) vanishes at integer z");
  const cplx i(0.0, 1.0);
  const cplx log_2i = std::log(2.0 * i);
  if (z.imag() > 5.0)
    return -i * kPi * z + std::log(std::exp(2.0 * i * kPi * z) - 1.0) - log_2i;
  if (z.imag() < -5.0)
    return i * kPi * z + std::log(1.0 - std::exp(-2.0 * i * kPi * z)) - log_2i;
  return std::log(std::sin(kPi * z));
}

cplx gauss_2f1(cplx a, cplx b, cplx c, double x) {
  if (is_nonpositive_integer(c))
    throw PoleError("specfun", "gauss_2f1", static_cast<long long>(c.real()),
                    "parameter c is a nonpositive integer");
  if (!(x <= 0.0))
    throw DomainError("specfun", "gauss_2f1", "requires x <= 0");
  if (x == 0.0) return 1.0;
  if (x >= -1.0) {
    const double z = x / (x - 1.0);
    return std::exp(-a * std::log1p(-x)) * series_2f1(a, c - b, c, z, false);
  }

  const double log1mx = std::log1p(-x);
  const double w = 1.0 / (1.0 - x);
  const cplx d = b - a;
  const double n = std::round(d.real());
  const double r = std::min(0.4, 1.0 / log1mx);
  if (std::abs(d - n) >= 0.5 * r) return connection_2f1(a, b, c, log1mx, w);

  constexpr int kNodes = 24;
  cplx acc = 0.0;
  for (int j = 0; j < kNodes; ++j) {
    const double theta = 2.0 * kPi * (j + 0.5) / kNodes;
    const cplx u = std::polar(0.5 * r, theta);
    acc += connection_2f1(a - u, b + u, c, log1mx, w);
  }
  return acc / static_cast<double>(kNodes);
}

}  // namespace rankone::specfun
