#include <cmath>

#include "doctest.h"
#include "rankone/errors.hpp"
#include "rankone/families.hpp"
#include "rankone/groups.hpp"
#include "rankone/schwartz.hpp"
#include "rankone/transform.hpp"

using namespace rankone;

namespace {
const specfun::QuadratureSpec kQ{};
}

TEST_CASE("seminorm of zero is zero") {
  RadialProfile zero;
  zero.eval = [](double) { return cplx(0.0); };
  zero.smoothness = RadialProfile::kAnalytic;
  const auto r = schwartz::schwartz_seminorm(groups::structural("SL2R"), zero, 3.0, 2);
  CHECK(r.value == 0.0);
}

TEST_CASE("seminorms of Xi (1+t)^{-3}") {
  const GroupDatum g = groups::structural("H3");
  const auto f = families::xi_weighted(g, 3.0);
  // (1+t)^{r-3} peaks at t = 0 for r < 3.
  const auto ok = schwartz::schwartz_seminorm(g, f, 2.5, 0);
  CHECK(std::isfinite(ok.value));
  CHECK(ok.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ok.saturated_at == 0.0);
  CHECK_FALSE(ok.boundary_saturated);
  const auto grow = schwartz::schwartz_seminorm(g, f, 5.0, 0);
  CHECK(grow.boundary_saturated);
  CHECK(grow.grid_spec.t_max == schwartz::kGridCap);
  CHECK(grow.value == doctest::Approx(std::pow(1.0 + schwartz::kGridCap, 2.0)).epsilon(1e-9));
}

TEST_CASE("seminorms are homogeneous") {
  const GroupDatum g = groups::structural("CH2");
  const auto f = families::poly_gaussian();
  RadialProfile twice = f;
  twice.eval = [f](double t) { return 2.0 * f(t); };
  twice.d1 = [f](double t) { return 2.0 * f.d1(t); };
  twice.d2 = [f](double t) { return 2.0 * f.d2(t); };
  for (int k = 0; k <= 2; ++k)
    CHECK(schwartz::schwartz_seminorm(g, twice, 3.0, k).value ==
          doctest::Approx(2.0 * schwartz::schwartz_seminorm(g, f, 3.0, k).value).epsilon(1e-14));
}

TEST_CASE("shipped profiles have finite seminorms up to r = 4, k = 2") {
  for (const auto& n : groups::preset_names()) {
    const GroupDatum g = groups::structural(n);
    for (const auto& f : families::test_profiles(g))
      for (int k = 0; k <= 2; ++k) {
        CAPTURE(n);
        CAPTURE(f.label);
        const auto r = schwartz::schwartz_seminorm(g, f, 4.0, k);
        CHECK(std::isfinite(r.value));
        CHECK_FALSE(r.boundary_saturated);
      }
  }
}

TEST_CASE("seminorm contract errors") {
  const GroupDatum g = groups::structural("SL2R");
  CHECK_THROWS_AS(schwartz::schwartz_seminorm(g, families::gaussian(), 1.0, 3), PreconditionError);
  CHECK_THROWS_AS(schwartz::schwartz_seminorm(g, families::gaussian(), -1.0, 0), PreconditionError);
  RadialProfile bad = families::gaussian();
  bad.eval = [](double t) { return t > 3.0 ? cplx(NAN) : cplx(1.0); };
  bad.d1 = bad.d2 = nullptr;
  CHECK_THROWS_AS(schwartz::schwartz_seminorm(g, bad, 1.0, 0), DomainError);
}

TEST_CASE("Weyl symmetry defect") {
  const auto grid = symmetric_grid(5.0, 21);
  std::vector<cplx> even(grid.size()), odd(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    even[i] = std::exp(-grid[i] * grid[i]);
    odd[i] = grid[i];
  }
  CHECK(schwartz::weyl_symmetry_defect(SpectralFunction(grid, even, {})) == 0.0);
  CHECK(schwartz::weyl_symmetry_defect(SpectralFunction(grid, odd, {})) == doctest::Approx(10.0));
  const auto skew = linear_grid(-1.0, 2.0, 9);
  CHECK_THROWS_AS(schwartz::weyl_symmetry_defect(SpectralFunction(skew, std::vector<cplx>(9), {})),
                  PreconditionError);
}

TEST_CASE("image membership") {
  const GroupDatum g = groups::structural("SL2R");
  const auto grid = transform::default_grid();
  CHECK(schwartz::image_membership(g, families::symbol_by_name("gauss", grid)).passed);
  auto failed = [&](const SpectralFunction& a, const std::string& name) {
    const auto r = schwartz::image_membership(g, a);
    for (const auto& c : r.criteria)
      if (c.name == name) return !r.passed && !c.passed;
    return false;
  };
  CHECK(failed(families::odd_symbol(grid), "weyl"));
  CHECK(failed(families::rational_symbol(grid), "decay_tail_N6"));
  CHECK(failed(families::rough_symbol(grid), "divided_difference_4"));
}

TEST_CASE("tube extension") {
  const GroupDatum g = groups::preset("H3");
  const auto f = families::gaussian();
  const auto flat = schwartz::tube_extension_check(g, f, schwartz::make_tube(g, 0.0), kQ);
  CHECK(flat.real_axis_defect == 0.0);
  CHECK(flat.finite);
  const auto a = families::symbol_by_name("gauss", transform::default_grid());
  const transform::WavePacket psi(g, a, kQ);
  const auto r = schwartz::tube_extension_check(g, psi.profile(), schwartz::make_tube(g, 0.5), kQ);
  CHECK(r.finite);
  CHECK(r.conjugacy_defect <= 1e-10);
  CHECK(r.tube.half_width == 0.5 * g.rho);
  CHECK_THROWS_AS(schwartz::make_tube(g, 1.5), ValidationError);
  const auto slow = families::sech_power(g, 1.2);
  CHECK_THROWS_AS(schwartz::tube_extension_check(g, slow, schwartz::make_tube(g, 0.5), kQ),
                  PreconditionError);
}
