#include <algorithm>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "rankone/cfunction.hpp"
#include "rankone/errors.hpp"
#include "rankone/groups.hpp"

using namespace rankone;
using std::numbers::pi;

TEST_CASE("c-function closed forms in low dimension") {
  const GroupDatum h3 = groups::structural("H3");
  for (double lam : {0.3, 1.0, 7.0}) {
    CHECK(std::abs(cfunction::c_function(h3, lam) - 1.0 / cplx(0.0, lam)) < 1e-13 / lam);
    CHECK(cfunction::plancherel_density(h3, lam) == doctest::Approx(lam * lam).epsilon(1e-13));
  }
  const GroupDatum sl2r = groups::structural("SL2R");
  for (double lam : {0.05, 0.5, 2.0, 9.0})
    CHECK(cfunction::plancherel_density(sl2r, lam) ==
          doctest::Approx(pi * lam * std::tanh(pi * lam)).epsilon(1e-13));
}

TEST_CASE("density is even, vanishes at 0 and grows like lam^{2 alpha + 1}") {
  for (const auto& n : groups::preset_names()) {
    const GroupDatum g = groups::structural(n);
    CHECK(cfunction::plancherel_density(g, 0.0) == 0.0);
    CHECK(cfunction::plancherel_density(g, -1.3) == cfunction::plancherel_density(g, 1.3));
    const double p = 2.0 * g.jacobi_alpha + 1.0;
    const double ratio = cfunction::plancherel_density(g, 400.0) / cfunction::plancherel_density(g, 200.0);
    CHECK(ratio == doctest::Approx(std::pow(2.0, p)).epsilon(1e-3));
    CHECK(cfunction::aggregate_density(g, 1.3) ==
          doctest::Approx(g.plancherel_constant * cfunction::plancherel_density(g, 1.3)));
    CHECK(cfunction::density_of(g).eval(2.0) == cfunction::plancherel_density(g, 2.0));
  }
}

TEST_CASE("c-function conjugate symmetry") {
  const GroupDatum g = groups::structural("CH2");
  for (double lam : {0.4, 3.0}) {
    const cplx c = cfunction::c_function(g, lam);
    CHECK(std::abs(cfunction::c_function(g, -lam) - std::conj(c)) < 1e-13 * std::abs(c));
  }
}

TEST_CASE("c-function pole at lam = 0") {
  CHECK_THROWS_AS(cfunction::c_function(groups::structural("H4"), 0.0), PoleError);
  CHECK_THROWS_AS(cfunction::c_function(groups::structural("H4"), cplx(0.0, 2.0)), PoleError);
}

TEST_CASE("asymptotic fit recovers c for every preset") {
  for (const auto& n : groups::preset_names()) {
    const GroupDatum g = groups::structural(n);
    const double T = std::max(12.0 / g.rho, 8.0);
    for (double lam : {0.7, 2.5}) {
      CAPTURE(n);
      CAPTURE(lam);
      const auto fit = cfunction::asymptotic_c_fit(g, lam, T);
      const cplx c = cfunction::c_function(g, lam);
      CHECK(std::abs(fit.c_plus - c) < 1e-6 * std::abs(c));
      CHECK(std::abs(fit.c_minus - std::conj(c)) < 1e-6 * std::abs(c));
      CHECK(fit.residual < 1e-6);
    }
  }
}

TEST_CASE("asymptotic fit preconditions") {
  const GroupDatum g = groups::structural("SL2R");
  CHECK_THROWS_AS(cfunction::asymptotic_c_fit(g, 1.0, 5.0), PreconditionError);
  CHECK_THROWS_AS(cfunction::asymptotic_c_fit(g, 1e-4, 25.0), ConditioningError);
}

TEST_CASE("calibrated Plancherel constant is 1/(2 pi) for every preset") {
  for (const auto& n : groups::preset_names()) {
    CAPTURE(n);
    CHECK(groups::preset(n).plancherel_constant == doctest::Approx(1.0 / (2.0 * pi)).epsilon(1e-10));
  }
}
