#include <cmath>
#include <numbers>

#include "doctest.h"
#include "rankone/errors.hpp"
#include "rankone/quadrature.hpp"

using namespace rankone;
using namespace rankone::specfun;

TEST_CASE("Gauss-Legendre rules integrate polynomials exactly") {
  for (int n : {2, 5, 20, 64}) {
    const auto& r = gauss_legendre(n);
    double sum = 0.0, moment = 0.0;
    for (int i = 0; i < n; ++i) {
      sum += r.weights[i];
      moment += r.weights[i] * std::pow(r.nodes[i], 2 * n - 2);
    }
    CHECK(sum == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(moment == doctest::Approx(2.0 / (2 * n - 1)).epsilon(1e-13));
  }
}

TEST_CASE("adaptive interval integration") {
  QuadratureSpec q;
  const auto r = integrate_interval([](double t) { return cplx(std::sqrt(t)); }, 0.0, 1.0, q);
  CHECK(std::abs(r.value - 2.0 / 3.0) < 1e-12);
  const auto osc = integrate_interval([](double t) { return std::exp(cplx(0.0, 30.0 * t)); }, 0.0,
                                      std::numbers::pi, q, 4);
  CHECK(std::abs(osc.value) < 1e-12);
}

TEST_CASE("half-line integration with a decay bound") {
  QuadratureSpec q;
  auto f = [](double t) { return cplx(std::exp(-t * t)); };
  const DecayBound env{std::exp(1.0), 2.0, 0.0};  // e^{-t^2} <= e^{1 - 2t}
  const auto r = integrate_halfline(f, env, q);
  CHECK(std::abs(r.value - std::sqrt(std::numbers::pi) / 2.0) < 1e-13);
  CHECK(r.err_est < 1e-10);
  CHECK_THROWS_AS(integrate_halfline(f, DecayBound{1.0, 0.0, 0.0}, q), DomainError);
}

TEST_CASE("tail bound and cutoff") {
  const DecayBound d{1.0, 1.0, 0.0};
  CHECK(d.tail(3.0) == doctest::Approx(std::exp(-3.0)));
  CHECK(std::isinf(DecayBound{1.0, -1.0, 0.0}.tail(1.0)));
  QuadratureSpec q;
  const double t = truncation_cutoff(d, q);
  CHECK(d.tail(t) <= q.truncation.tail_fraction * q.abs_tol);
  CHECK(std::fmod(t, q.truncation.step) == 0.0);
}

TEST_CASE("subdivision budget exhaustion raises an accuracy error") {
  QuadratureSpec q;
  q.max_subdivisions = 4;
  auto f = [](double t) { return cplx(std::sin(1.0 / (t + 1e-6))); };
  CHECK_THROWS_AS(integrate_interval(f, 0.0, 1.0, q), AccuracyError);
}

TEST_CASE("quadrature spec validation") {
  QuadratureSpec q;
  q.rel_tol = 1e-16;
  CHECK_THROWS_AS(q.validate(), ValidationError);
  q = {};
  q.order = 1;
  CHECK_THROWS_AS(q.validate(), ValidationError);
  q = {};
  q.abs_tol = 0.0;
  CHECK_THROWS_AS(q.validate(), ValidationError);
}

TEST_CASE("pairwise sum is schedule independent") {
  std::vector<cplx> v(1000);
  for (int i = 0; i < 1000; ++i) v[i] = 1.0 / (1.0 + i);
  const cplx a = pairwise_sum(v);
  const cplx b = pairwise_sum(v);
  CHECK(a == b);
}
