#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "cylq/quadrature.hpp"

using namespace cylq;

TEST_CASE("gauss-legendre weights sum to one") {
  for (int n : {2, 8, 64, 128}) {
    const QuadratureRule rule = gauss_legendre_01(n);
    double s = 0.0;
    for (double w : rule.weights) s += w;
    CHECK(std::abs(s - 1.0) < 1e-14);
  }
}

TEST_CASE("gauss-legendre integrates polynomials of degree 2n-1 exactly") {
  const int n = 64;
  const QuadratureRule rule = gauss_legendre_01(n);
  for (int d : {1, 5, 31, 64, 100, 2 * n - 1}) {
    const double got = rule.integrate([&](double s) { return std::pow(s, d); });
    CHECK(std::abs(got - 1.0 / (d + 1)) < 1e-12);
  }
}

TEST_CASE("gauss-legendre converges on a smooth integrand") {
  const double exact = 1.0 - std::exp(-1.0);
  const QuadratureRule coarse = gauss_legendre_01(64);
  const QuadratureRule fine = gauss_legendre_01(128);
  const double a = coarse.integrate([](double s) { return std::exp(-s); });
  const double b = fine.integrate([](double s) { return std::exp(-s); });
  CHECK(std::abs(a - exact) < 1e-14);
  CHECK(std::abs(a - b) < 1e-14);
}

TEST_CASE("gauss-hermite moments") {
  const HermiteRule rule = gauss_hermite(40);
  const double sqrtpi = std::sqrt(std::numbers::pi);
  CHECK(std::abs(rule.integrate([](double) { return 1.0; }) - sqrtpi) < 1e-13);
  CHECK(std::abs(rule.integrate([](double u) { return u; })) < 1e-13);
  CHECK(std::abs(rule.integrate([](double u) { return u * u; }) - 0.5 * sqrtpi) < 1e-13);
  // degree 2n-1 exactness spot check: <u^8> = 105/16 sqrt(pi)
  CHECK(std::abs(rule.integrate([](double u) { return std::pow(u, 8); }) -
                 105.0 / 16.0 * sqrtpi) < 1e-11);
}

TEST_CASE("rules reject degenerate sizes") {
  REQUIRE_THROWS_AS(gauss_legendre_01(1), validation_error);
  REQUIRE_THROWS_AS(gauss_hermite(0), validation_error);
}
