#include <cmath>
#include <numbers>

#include "doctest.h"
#include "rankone/cfunction.hpp"
#include "rankone/errors.hpp"
#include "rankone/families.hpp"
#include "rankone/groups.hpp"
#include "rankone/transform.hpp"

using namespace rankone;
using std::numbers::pi;

namespace {

const specfun::QuadratureSpec kQ{};

// H3 transform of e^{-t^2}: (2 sqrt(pi)/lam) e^{(1 - lam^2)/4} sin(lam/2).
double h3_gaussian_transform(double lam) {
  if (lam == 0.0) return std::sqrt(pi) * std::exp(0.25);
  return 2.0 * std::sqrt(pi) / lam * std::exp((1.0 - lam * lam) / 4.0) * std::sin(lam / 2.0);
}

}  // namespace

TEST_CASE("transform of a Gaussian on hyperbolic 3-space") {
  const GroupDatum g = groups::structural("H3");
  const auto f = families::gaussian();
  for (double lam : {0.0, 0.5, 2.0, 6.0}) {
    CAPTURE(lam);
    const auto r = transform::hc_transform_at(g, f, lam, kQ);
    CHECK(std::abs(r.value - h3_gaussian_transform(lam)) < 1e-12);
    CHECK(r.err_est < 1e-9);
  }
}

TEST_CASE("transform of a Gaussian on SL2R at lam = 1") {
  // Offline 30-digit quadrature.
  const auto r = transform::hc_transform_at(groups::structural("SL2R"), families::gaussian(), 1.0, kQ);
  CHECK(r.value.real() == doctest::Approx(0.845503589372827).epsilon(1e-13));
  CHECK(std::abs(r.value.imag()) < 1e-15);
}

TEST_CASE("grid transform is Weyl-even and linear") {
  const GroupDatum g = groups::structural("CH2");
  const auto grid = symmetric_grid(8.0, 33);
  const auto f = families::gaussian();
  const auto h = families::sech_power(g);
  const auto hf = transform::hc_transform(g, f, grid, kQ);
  CHECK(hf.spectral.odd_part() < 1e-12);
  CHECK(hf.err_est.size() == grid.size());
  CHECK(hf.group == g);
  RadialProfile combo = h;
  combo.eval = [f, h](double t) { return 2.0 * f(t) + h(t); };
  combo.decay = {2.0 * f.decay.c + h.decay.c, std::min(f.decay.rate, h.decay.rate), 0.0};
  const auto hh = transform::hc_transform(g, h, grid, kQ);
  const auto hc = transform::hc_transform(g, combo, grid, kQ);
  for (std::size_t i = 0; i < grid.size(); ++i)
    CHECK(std::abs(hc.spectral.values()[i] - 2.0 * hf.spectral.values()[i] - hh.spectral.values()[i]) <
          1e-11);
}

TEST_CASE("transform rejects profiles that decay too slowly") {
  const GroupDatum g = groups::structural("H4");
  const auto slow = families::xi_weighted(g, 2.0);
  CHECK_THROWS_AS(transform::hc_transform_at(g, slow, 1.0, kQ), PreconditionError);
  // Complex parameters need a margin for |Im lam|.
  CHECK_THROWS_AS(transform::hc_transform_at(g, families::sech_power(g), cplx(1.0, 3.0), kQ),
                  PreconditionError);
}

TEST_CASE("wave packet of a Gaussian symbol on hyperbolic 3-space") {
  // psi(t) = c_P (sqrt(pi) t / 4) e^{-t^2/4} / sinh t with c_P = 1/(2 pi).
  GroupDatum g = groups::structural("H3");
  g.plancherel_constant = 1.0 / (2.0 * pi);
  const auto a = families::symbol_by_name("gauss", transform::default_grid());
  const transform::WavePacket psi(g, a, kQ);
  for (double t : {0.0, 0.5, 2.0, 6.0}) {
    const double exact = t == 0.0 ? 1.0 / (8.0 * std::sqrt(pi))
                                  : t * std::exp(-t * t / 4.0) / (8.0 * std::sqrt(pi) * std::sinh(t));
    CHECK(std::abs(psi(t) - exact) < 1e-14);
  }
  CHECK(psi.err_est() < 1e-12);
  CHECK(psi(-2.0) == psi(2.0));
  CHECK(decay_ratio(psi.profile(), 30.0) <= 1.0);
}

TEST_CASE("inversion round trip on the sampled path") {
  const GroupDatum g = groups::preset("H3");
  const auto grid = transform::default_grid();
  const auto exact = families::symbol_by_name("wide_gauss", grid);
  const SpectralFunction sampled(exact.grid(), exact.values(), exact.decay());
  const transform::WavePacket psi(g, sampled, kQ);
  for (double lam : {0.0, 1.0, 3.0}) {
    const auto r = transform::hc_transform_at(g, psi.profile(), lam, kQ);
    CHECK(std::abs(r.value - exact(lam)) < 1e-6);
  }
}

TEST_CASE("wave packet preconditions") {
  const GroupDatum g = groups::preset("SL2R");
  const auto grid = transform::default_grid();
  CHECK_THROWS_AS(transform::WavePacket(g, families::odd_symbol(grid), kQ), PreconditionError);
  CHECK_THROWS_AS(transform::WavePacket(g, families::rational_symbol(grid), kQ), PreconditionError);
}

TEST_CASE("Plancherel pairing of Gaussians on hyperbolic 3-space") {
  GroupDatum g = groups::structural("H3");
  g.plancherel_constant = 1.0 / (2.0 * pi);
  const auto a = families::symbol_by_name("gauss", transform::default_grid());
  const auto r = transform::plancherel_pairing(g, a, a, kQ);
  // int_0^inf nu^2 e^{-2 nu^2} = sqrt(pi) / (4 * 2^{3/2}).
  CHECK(r.value.real() == doctest::Approx(std::sqrt(pi) / (4.0 * std::pow(2.0, 1.5)) / (2.0 * pi)).epsilon(1e-12));
}

TEST_CASE("convolution at the identity") {
  const GroupDatum g = groups::structural("H3");
  const auto f = families::gaussian();
  const auto r = transform::convolve_at_identity(g, f, f, kQ);
  CHECK(r.value.real() == doctest::Approx(std::sqrt(pi / 2.0) * (std::exp(0.5) - 1.0)).epsilon(1e-12));
  const auto slow = families::xi_weighted(g, 0.5);
  CHECK_THROWS_AS(transform::convolve_at_identity(g, slow, slow, kQ), PreconditionError);
}

TEST_CASE("radial Casimir acts on phi_lam by -(lam^2 + rho^2)") {
  for (const auto& n : groups::preset_names()) {
    const GroupDatum g = groups::structural(n);
    const auto p = spherical::phi_profile(g, 1.7);
    const cplx m = transform::casimir_symbol(g)(1.7);
    for (double t : {0.4, 2.0}) CHECK(std::abs(transform::casimir_radial(g, p, t) - m * p(t)) < 1e-11);
    CHECK_THROWS_AS(transform::casimir_radial(g, p, 0.0), DomainError);
  }
}

TEST_CASE("spectral multiplier") {
  const auto a = families::symbol_by_name("gauss", transform::default_grid());
  const auto m = transform::spectral_multiplier(a, [](double l) { return cplx(l * l); }, 2.0);
  CHECK(m.decay().order == 6.0);
  CHECK(m(1.5) == a(1.5) * 2.25);
  CHECK(m.values()[0] == a.values()[0] * a.grid()[0] * a.grid()[0]);
}

TEST_CASE("expansion terms") {
  const GroupDatum g = groups::preset("H3");
  const auto f = families::gaussian();
  using transform::CartanClass;
  CHECK(transform::expansion_term(g, CartanClass::compact, f, 1.0, 0.2, kQ) == cplx(0.0));
  CHECK_THROWS_AS(transform::expansion_term(g, CartanClass::split, f, 1.0, 0.0, kQ), DomainError);
  CHECK_THROWS_AS(transform::expansion_term(g, CartanClass::split, f, 1.0, 1.5, kQ), DomainError);
  const double exact = h3_gaussian_transform(1.0);
  const double e1 = std::abs(transform::expansion_term(g, CartanClass::split, f, 1.0, 0.4, kQ) - exact);
  const double e2 = std::abs(transform::expansion_term(g, CartanClass::split, f, 1.0, 0.1, kQ) - exact);
  // Second-order mollifier: quartering eps^2 cuts the bias by about 16.
  CHECK(e1 / e2 > 10.0);
  CHECK(e1 / e2 < 22.0);
}

TEST_CASE("calibration reproduces 1/(2 pi) independent of the stored constant") {
  GroupDatum g = groups::structural("H4");
  g.plancherel_constant = 123.0;
  CHECK(transform::calibrate(g, kQ) == doctest::Approx(1.0 / (2.0 * pi)).epsilon(1e-10));
}

TEST_CASE("wave packet at the identity equals the Plancherel mass of the symbol") {
  const GroupDatum g = groups::preset("CH2");
  const auto a = families::symbol_by_name("shifted_gauss", transform::default_grid());
  const transform::WavePacket psi(g, a, kQ);
  auto integrand = [&](double nu) { return a(nu) * cfunction::plancherel_density(g, nu); };
  const auto mass = specfun::integrate_interval(integrand, 0.0, 12.0, kQ, 24);
  CHECK(std::abs(psi(0.0) - g.plancherel_constant * mass.value) < 1e-10);
  const auto zero = transform::spectral_multiplier(a, [](double) { return cplx(0.0); }, 0.0);
  CHECK(transform::wave_packet(g, zero, 1.5, kQ) == cplx(0.0));
}

TEST_CASE("convolution is commutative and matches the packet of the product symbol") {
  const GroupDatum g = groups::preset("SL2R");
  const auto grid = transform::default_grid();
  const auto a = families::symbol_by_name("gauss", grid);
  const auto b = families::symbol_by_name("quartic", grid);
  const transform::WavePacket pa(g, a, kQ), pb(g, b, kQ);
  const cplx ab = transform::convolve_at_identity(g, pa.profile(), pb.profile(), kQ).value;
  const cplx ba = transform::convolve_at_identity(g, pb.profile(), pa.profile(), kQ).value;
  CHECK(std::abs(ab - ba) < 1e-12 * std::abs(ab));
  const auto prod = transform::spectral_multiplier(a, b.exact(), 0.0);
  CHECK(std::abs(ab - transform::WavePacket(g, prod, kQ)(0.0)) < 1e-5 * (1.0 + std::abs(ab)));
  RadialProfile zero = families::gaussian();
  zero.eval = [](double) { return cplx(0.0); };
  CHECK(transform::convolve_at_identity(g, pa.profile(), zero, kQ).value == cplx(0.0));
}

TEST_CASE("energy identity: pairing(Hf, Hf) = int |f|^2 Delta") {
  const GroupDatum g = groups::preset("CH2");
  const auto f = families::sech_power(g);
  const auto hf = transform::hc_transform(g, f, transform::default_grid(), kQ);
  const cplx lhs = transform::plancherel_pairing(g, hf.spectral, hf.spectral, kQ).value;
  const cplx rhs = transform::convolve_at_identity(g, f, f, kQ).value;
  CHECK(std::abs(lhs - rhs) < 1e-8 * std::abs(rhs));
  const auto a = families::symbol_by_name("gauss", transform::default_grid());
  CHECK(transform::plancherel_pairing(g, a, hf.spectral, kQ).value ==
        transform::plancherel_pairing(g, hf.spectral, a, kQ).value);
}

TEST_CASE("calibration is deterministic and consistent away from the reference point") {
  const GroupDatum g = groups::structural("SL2R");
  CHECK(transform::calibrate(g, kQ) == transform::calibrate(g, kQ));
  GroupDatum cal = g;
  cal.plancherel_constant = transform::calibrate(g, kQ);
  const auto a = families::symbol_by_name("gauss", transform::default_grid());
  const transform::WavePacket psi(cal, a, kQ);
  for (double lam : {0.5, 2.0})
    CHECK(std::abs(transform::hc_transform_at(cal, psi.profile(), lam, kQ).value - a(lam)) < 1e-6);
}

TEST_CASE("expansion term is Weyl-invariant in lam") {
  const GroupDatum g = groups::preset("SL2R");
  const auto f = families::sech_power(g);
  const cplx p = transform::expansion_term(g, transform::CartanClass::split, f, 1.3, 0.3, kQ);
  const cplx m = transform::expansion_term(g, transform::CartanClass::split, f, -1.3, 0.3, kQ);
  CHECK(std::abs(p - m) <= 1e-10);
}

TEST_CASE("Casimir of a constant profile vanishes") {
  RadialProfile one;
  one.eval = [](double) { return cplx(1.0); };
  one.smoothness = RadialProfile::kAnalytic;
  CHECK(std::abs(transform::casimir_radial(groups::structural("CH2"), one, 0.8)) < 1e-7);
  const auto a = families::symbol_by_name("gauss", transform::default_grid());
  const auto id = transform::spectral_multiplier(a, [](double) { return cplx(1.0); }, 0.0);
  CHECK(id.values() == a.values());
}
