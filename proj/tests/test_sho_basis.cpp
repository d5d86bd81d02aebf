#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "cylq/hermite.hpp"
#include "cylq/sho_basis.hpp"

using namespace cylq;

namespace {

// independent trapezoid oracle over a range wide enough for n <= 20
double trapezoid_overlap(int n, double center_n, int m, double center_m) {
  const double lo = -16.0, hi = 16.0;
  const int steps = 32000;
  const double h = (hi - lo) / steps;
  double acc = 0.0;
  for (int i = 0; i <= steps; ++i) {
    const double z = lo + i * h;
    const double w = (i == 0 || i == steps) ? 0.5 : 1.0;
    acc += w * eigenfunction(n, center_n, z) * eigenfunction(m, center_m, z);
  }
  return acc * h;
}

}  // namespace

TEST_CASE("hermite recurrence reproduces low-order polynomials") {
  const HermiteEvaluator H(10);
  for (double z : {-1.3, 0.0, 0.7, 2.5}) {
    CHECK(H(0, z) == 1.0);
    CHECK(H(1, z) == 2.0 * z);
    CHECK(H(2, z) == Catch::Approx(4.0 * z * z - 2.0));
    CHECK(H(3, z) == Catch::Approx(8.0 * z * z * z - 12.0 * z));
    const auto& all = H.all(z);
    CHECK(all[3] == Catch::Approx(H(3, z)));
    // recurrence invariant at order 6
    CHECK(all[6] == Catch::Approx(2.0 * z * all[5] - 2.0 * 5.0 * all[4]));
  }
  REQUIRE_THROWS_AS(H(11, 0.0), validation_error);
}

TEST_CASE("eigenfunction anchor values") {
  CHECK(eigenfunction(0, 0.0, 0.0) == Catch::Approx(std::pow(std::numbers::pi, -0.25)));
  CHECK(eigenfunction(1, 0.0, 0.0) == 0.0);
}

TEST_CASE("eigenfunction orthonormality by quadrature") {
  CHECK(std::abs(trapezoid_overlap(2, 0.0, 0, 0.0)) < 1e-12);
  for (int n : {0, 1, 5, 12, 20}) {
    CHECK(std::abs(trapezoid_overlap(n, 0.0, n, 0.0) - 1.0) < 1e-10);
    if (n > 0) CHECK(std::abs(trapezoid_overlap(n, 0.0, n - 1, 0.0)) < 1e-10);
  }
}

TEST_CASE("eigenfunction parity") {
  for (int n : {0, 1, 2, 7, 15, 40, 80}) {
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    for (double z : {0.3, 1.9, 4.4}) {
      CHECK(eigenfunction(n, 0.0, -z) == Catch::Approx(sign * eigenfunction(n, 0.0, z)).margin(1e-14));
    }
  }
}

TEST_CASE("eigenfunction stays finite at high order") {
  // jointly scaled recurrence: no overflow at n = 200
  const double v = eigenfunction(200, 0.0, 1.0);
  CHECK(std::isfinite(v));
  CHECK(std::abs(v) < 1.0);
}

TEST_CASE("overlap_row0 closed form") {
  const double b = 2.0;
  CHECK(overlap_row0(0, b) == Catch::Approx(std::exp(-1.0)).epsilon(1e-14));
  CHECK(overlap_row0(1, b) == Catch::Approx(-std::sqrt(2.0) * std::exp(-1.0)).epsilon(1e-14));
}

TEST_CASE("overlap_row0 matches quadrature, both displacement directions") {
  // the closed form is the displaced-bra overlap int psi_0(z+b) psi_k(z) dz;
  // displacing the other way flips the sign of odd rows
  const double b = 1.5;
  const double quad_bra = trapezoid_overlap(0, -b, 3, 0.0);
  CHECK(std::abs(quad_bra - overlap_row0(3, b)) < 1e-10);
  const double quad_ket = trapezoid_overlap(0, 0.0, 3, -b);  // int psi_0(z) psi_3(z+b) dz
  CHECK(std::abs(quad_ket - overlap_row0(3, -b)) < 1e-10);
  CHECK(std::abs(quad_ket + quad_bra) < 1e-10);
}

TEST_CASE("overlap matrix: 1x1 and zero displacement") {
  const double b = 1.7;
  const OverlapMatrix one = build_overlap_matrix(1, b);
  CHECK(one.at(0, 0) == Catch::Approx(std::exp(-b * b / 4.0)).epsilon(1e-13));

  const OverlapMatrix id = build_overlap_matrix(8, 0.0);
  for (int n = 0; n < 8; ++n)
    for (int m = 0; m < 8; ++m)
      CHECK(std::abs(id.at(n, m) - (n == m ? 1.0 : 0.0)) < 1e-13);
}

TEST_CASE("overlap matrix row 0 equals the closed form") {
  const OverlapMatrix T = build_overlap_matrix(6, 2.0);
  for (int k = 0; k < 6; ++k) CHECK(std::abs(T.at(0, k) - overlap_row0(k, 2.0)) < 1e-10);
}

TEST_CASE("overlap matrix entries are bounded and swap-symmetric") {
  const OverlapMatrix T = build_overlap_matrix(12, 2.0);
  for (int n = 0; n < 12; ++n) {
    for (int m = 0; m < 12; ++m) {
      CHECK(std::abs(T.at(n, m)) <= 1.0 + 1e-12);
      const double sign = ((n + m) % 2 == 0) ? 1.0 : -1.0;
      CHECK(T.at(m, n) == Catch::Approx(sign * T.at(n, m)).margin(1e-12));
    }
  }
}

TEST_CASE("overlap matrix completeness") {
  const int N = 60;
  const OverlapMatrix T = build_overlap_matrix(N, 2.0);
  // T T^T approaches the identity; check the top-left 20x20 block
  for (int n = 0; n < 20; ++n) {
    for (int m = 0; m < 20; ++m) {
      double acc = 0.0;
      for (int k = 0; k < N; ++k) acc += T.at(n, k) * T.at(m, k);
      CHECK(std::abs(acc - (n == m ? 1.0 : 0.0)) < 1e-8);
    }
  }
}

TEST_CASE("overlap entries against an independent quadrature") {
  const double b = 2.0;
  const OverlapMatrix T = build_overlap_matrix(6, b);
  for (int n = 0; n < 4; ++n)
    for (int m = 0; m < 4; ++m)
      CHECK(std::abs(T.at(n, m) - trapezoid_overlap(n, -b, m, 0.0)) < 1e-10);
}
