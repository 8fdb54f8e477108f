#include <doctest.h>

#include <cmath>
#include <numbers>

#include "orthospec/errors.hpp"
#include "orthospec/quadrature.hpp"

using namespace orthospec;

TEST_CASE("quadrature is exact on low-degree polynomials") {
  const auto r = quadrature::integrate([](double x) { return 3 * x * x - 2 * x + 1; }, -1.0, 2.0);
  CHECK(r.value == doctest::Approx(9.0).epsilon(1e-15));
  CHECK(r.panels == 1);
}

TEST_CASE("quadrature handles smooth and endpoint-singular integrands") {
  const auto e = quadrature::integrate([](double x) { return std::exp(-x); }, 0.0, 30.0);
  CHECK(std::abs(e.value - (1.0 - std::exp(-30.0))) < 1e-12);

  const auto s = quadrature::integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0);
  CHECK(std::abs(s.value - 2.0 / 3.0) < 1e-10);
  CHECK(s.panels > 1);
}

TEST_CASE("reversed bounds negate the integral") {
  const auto f = [](double x) { return std::cos(x); };
  const auto forward = quadrature::integrate(f, 0.0, std::numbers::pi / 2);
  const auto backward = quadrature::integrate(f, std::numbers::pi / 2, 0.0);
  CHECK(backward.value == doctest::Approx(-forward.value));
  CHECK(quadrature::integrate(f, 1.0, 1.0).value == 0.0);
}

TEST_CASE("exhausted panel budget reports the best estimate") {
  quadrature::Options opts;
  opts.abs_tol = 1e-14;
  opts.max_panels = 4;
  try {
    quadrature::integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, opts);
    FAIL("expected QuadratureError");
  } catch (const QuadratureError& e) {
    CHECK(e.estimate() > 1.0);
    CHECK(e.estimate() < 2.0);
    CHECK(e.error_bound() > opts.abs_tol);
  }
  opts.abs_tol = 0.0;
  CHECK_THROWS_AS(quadrature::integrate([](double) { return 1.0; }, 0.0, 1.0, opts), ArgumentError);
}
