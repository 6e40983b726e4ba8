#include <doctest.h>

#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "morsesusy/quadrature.hpp"

using namespace morsesusy;

TEST_CASE("gauss_legendre weights and symmetry") {
  const GaussLegendreRule& r = gauss_legendre64();
  REQUIRE(r.nodes.size() == 64);
  CHECK(r.weights.sum() == doctest::Approx(2.0).epsilon(1e-14));
  for (Index i = 0; i < 64; ++i) {
    CHECK(r.nodes(i) == doctest::Approx(-r.nodes(63 - i)).epsilon(1e-14));
    CHECK(r.weights(i) > 0.0);
  }
  // the same object is handed out every time
  CHECK(&gauss_legendre64() == &r);
}

TEST_CASE("n-point rule is exact through degree 2n - 1") {
  const GaussLegendreRule r = gauss_legendre(5);
  for (int k = 0; k <= 9; ++k) {
    double s = 0.0;
    for (Index i = 0; i < 5; ++i) s += r.weights(i) * std::pow(r.nodes(i), k);
    const double want = (k % 2 == 0) ? 2.0 / (k + 1) : 0.0;
    CHECK(s == doctest::Approx(want).epsilon(1e-14).scale(1.0));
  }
}

TEST_CASE("integrate_panel and integrate_composite") {
  CHECK(integrate_panel([](double x) { return std::sin(x); }, 0.0, std::numbers::pi) ==
        doctest::Approx(2.0).epsilon(1e-14));
  CHECK(integrate_composite([](double x) { return std::exp(-x * x); }, -6.0, 6.0, 4) ==
        doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-14));
}

TEST_CASE("vector-valued integrands") {
  const Eigen::Vector2d v = integrate_panel([](double x) { return Eigen::Vector2d(x, x * x); }, 0.0, 3.0);
  CHECK(v(0) == doctest::Approx(4.5).epsilon(1e-14));
  CHECK(v(1) == doctest::Approx(9.0).epsilon(1e-14));
}

TEST_CASE("integrate_semi_infinite") {
  CHECK(integrate_semi_infinite([](double x) { return std::exp(-x); }) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(integrate_semi_infinite([](double x) { return x * x * std::exp(-x); }) ==
        doctest::Approx(2.0).epsilon(1e-13));
  // a narrow feature near the origin is resolved by geometric grading
  SemiInfiniteOptions opt;
  opt.singular_distance = 1e-3;
  const double eps = 1e-3;
  const double lorentz = integrate_semi_infinite(
      [eps](double x) { return eps / (x * x + eps * eps) * std::exp(-x); }, opt);
  // reference value from 30-digit adaptive quadrature
  CHECK(lorentz == doctest::Approx(1.5634650031433634869).epsilon(1e-12));
}

TEST_CASE("integrate_semi_infinite gives up on slow tails") {
  SemiInfiniteOptions opt;
  opt.max_extent = 50.0;
  CHECK_THROWS_AS(integrate_semi_infinite([](double x) { return 1.0 / (1.0 + x * x); }, opt), QuadratureError);
}
