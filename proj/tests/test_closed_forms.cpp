#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "cylq/closed_forms.hpp"

using namespace cylq;

TEST_CASE("ein at zero") { CHECK(ein(0.0) == 0.0); }

TEST_CASE("ein matches its defining integral") {
  const QuadratureRule rule = gauss_legendre_01(64);
  for (double y : {1.0, -2.0, 5.0, -7.5}) {
    const double quad = rule.integrate([&](double s) { return -std::expm1(-y * s) / s; });
    CHECK(std::abs(ein(y) - quad) < 1e-12 * std::max(1.0, std::abs(quad)));
  }
}

TEST_CASE("ein overflow guard") {
  REQUIRE_THROWS_AS(ein(701.0), validation_error);
  REQUIRE_THROWS_AS(ein(-701.0), validation_error);
  REQUIRE_NOTHROW(ein(699.0));
}

TEST_CASE("ground energy corrections closed forms") {
  for (double b : {1.0, 2.0, 3.0}) {
    const GroundEnergyCorrections e = energy_corrections_closed(b);
    CHECK(e.E0 == 0.5);
    CHECK(e.E1 == Catch::Approx(std::exp(-b * b / 4.0)).epsilon(1e-15));
    CHECK(e.E2 < 0.0);  // the integrand 1 - e^{b^2 s/2} is negative
    // direct quadrature of the defining integral
    const QuadratureRule rule = gauss_legendre_01(64);
    const double quad = std::exp(-b * b / 2.0) *
                        rule.integrate([&](double s) { return -std::expm1(b * b * s / 2.0) / s; });
    CHECK(e.E2 == Catch::Approx(quad).epsilon(1e-12));
  }
  CHECK(energy_corrections_closed(2.0).E1 == Catch::Approx(std::exp(-1.0)));
  REQUIRE_THROWS_AS(energy_corrections_closed(0.0), validation_error);
}

TEST_CASE("first-order integrand has no pole at s = 0") {
  // evaluate the cancelled integrand by hand at tiny s and compare with
  // the analytic s -> 0 limit, which is b z (the derivative of -u at 0)
  const double b = 2.0, z = 1.3;
  const double s = 1e-8;
  const double u = -b * z * s - 0.25 * b * b * s * s;
  const double value = -std::expm1(u) / s;
  CHECK(std::abs(value - b * z) < 1e-6);
}

TEST_CASE("zplus corrections: large-b suppression") {
  const std::vector<double> zs = {-1.0, -0.5, 0.0, 0.5, 1.0};
  const std::vector<double> v = zplus_correction(1, 10.0, zs);
  for (double x : v) CHECK(std::abs(x) < 1e-8);
}

TEST_CASE("zplus corrections: node doubling is already converged") {
  const std::vector<double> zs = {-3.0, -1.0, 0.0, 1.0, 2.0};
  const std::vector<double> a1 = zplus_correction(1, 2.0, zs, 64);
  const std::vector<double> b1 = zplus_correction(1, 2.0, zs, 128);
  const std::vector<double> a2 = zplus_correction(2, 2.0, zs, 64);
  const std::vector<double> b2 = zplus_correction(2, 2.0, zs, 128);
  for (std::size_t i = 0; i < zs.size(); ++i) {
    CHECK(std::abs(a1[i] - b1[i]) < 1e-10);
    CHECK(std::abs(a2[i] - b2[i]) < 1e-10);
  }
}

TEST_CASE("zplus correction order validation") {
  REQUIRE_THROWS_AS(zplus_correction(3, 2.0, {0.0}), validation_error);
  REQUIRE_THROWS_AS(zplus_correction(1, -1.0, {0.0}), validation_error);
}

TEST_CASE("appendix resummation basics") {
  REQUIRE_THROWS_AS(appendix_first_order(2.0, 0), validation_error);

  // coefficients vanish like b^k as b -> 0
  const AppendixFirstOrder tiny = appendix_first_order(1e-3, 6);
  for (int k = 1; k <= 6; ++k)
    CHECK(std::abs(tiny.series[k]) < std::pow(1e-3, k));

  // factorial tail decay
  const AppendixFirstOrder a = appendix_first_order(2.0, 40);
  CHECK(a.tail_bound < 1e-30);
  CHECK(std::abs(a.series[40]) == a.tail_bound);
  CHECK(std::abs(a.series[40]) < std::abs(a.series[20]));

  // sign pattern of the standard-perturbation assembly: coefficient of
  // x^1 is + e^{-b^2/4} b/sqrt(2)
  const double b = 2.0;
  CHECK(a.series[1] == Catch::Approx(std::exp(-b * b / 4.0) * b / std::sqrt(2.0)).epsilon(1e-14));
}
