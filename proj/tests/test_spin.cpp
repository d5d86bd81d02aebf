#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>

#include "cylq/perturbation.hpp"
#include "cylq/spin.hpp"

using namespace cylq;

namespace {

constexpr double kPi = std::numbers::pi;

PhysicsConfig figure_config() {
  PhysicsConfig cfg;
  cfg.b = 2.0;
  cfg.epsilon = 0.5;
  return cfg;
}

SpinorProfile figure_profile(Branch br, double eps = 0.5) {
  const PerturbationSolution sol = solve_perturbation(0, 2, br, figure_config());
  // 2201 samples over [-12, 10]: mirror-symmetric grid containing -b/2
  return synthesize_wavefunction(sol, eps, -12.0, 10.0, 2201);
}

}  // namespace

TEST_CASE("spin points along +rho at the midpoint, symmetric branch") {
  const SpinField sf = spin_field(figure_profile(Branch::symmetric), 0.0);
  const int mid = 1100;
  REQUIRE(sf.z[mid] == Catch::Approx(-1.0).margin(1e-12));
  CHECK(std::abs(sf.alpha[mid] - kPi / 2.0) < 1e-10);
  const auto n = sf.direction(mid);
  CHECK(n[0] == Catch::Approx(1.0).epsilon(1e-10));
  CHECK(std::abs(n[2]) < 1e-10);
}

TEST_CASE("spin points along -rho at the midpoint, antisymmetric branch") {
  const SpinField sf = spin_field(figure_profile(Branch::antisymmetric), 0.0);
  const int mid = 1100;
  CHECK(std::abs(sf.alpha[mid] - kPi / 2.0) < 1e-10);
  const auto n = sf.direction(mid);
  CHECK(n[0] == Catch::Approx(-1.0).epsilon(1e-10));  // beta picked up pi
}

TEST_CASE("spin tends toward the axis at the range ends") {
  const SpinField sf = spin_field(figure_profile(Branch::symmetric), 0.0);
  // algebraic approach ~ 2 eps/(b z): small but not gaussian-small
  CHECK(sf.alpha.back() < 0.1);
  CHECK(sf.alpha.front() > kPi - 0.1);
  // monotone trend across the outer third
  CHECK(sf.alpha.back() < sf.alpha[1800]);
  CHECK(sf.alpha.front() > sf.alpha[300]);
}

TEST_CASE("spin direction is a unit vector everywhere") {
  const SpinField sf = spin_field(figure_profile(Branch::symmetric), 0.7);
  for (std::size_t i = 0; i < sf.z.size(); i += 37) {
    const auto n = sf.direction(i);
    CHECK(std::abs(n[0] * n[0] + n[1] * n[1] + n[2] * n[2] - 1.0) < 1e-14);
  }
}

TEST_CASE("rho is the quadrature sum of the components") {
  const SpinorProfile prof = figure_profile(Branch::symmetric);
  const SpinField sf = spin_field(prof, 0.0);
  for (std::size_t i = 0; i < prof.z.size(); i += 101) {
    CHECK(sf.rho[i] == Catch::Approx(std::sqrt(prof.zplus[i] * prof.zplus[i] +
                                               prof.zminus[i] * prof.zminus[i]))
                           .margin(1e-15));
  }
}

TEST_CASE("samples with both components zero are flagged and interpolated") {
  SpinorProfile prof;
  prof.z = {0.0, 1.0, 2.0};
  prof.zplus = {1.0, 0.0, 1.0};
  prof.zminus = {1.0, 0.0, 0.0};
  const SpinField sf = spin_field(prof, 0.0);
  CHECK_FALSE(sf.flagged[0]);
  CHECK(sf.flagged[1]);
  CHECK(sf.alpha[1] == sf.alpha[0]);  // nearest defined neighbor
  CHECK(sf.alpha[2] == 0.0);
}

TEST_CASE("perturbation creates a zero crossing in the symmetric component") {
  const SpinorProfile prof = figure_profile(Branch::symmetric);
  int crossings = 0;
  double where = 0.0;
  for (std::size_t i = 1; i < prof.z.size(); ++i) {
    if (prof.zplus[i - 1] * prof.zplus[i] < 0.0) {
      ++crossings;
      where = prof.z[i];
    }
  }
  CHECK(crossings >= 1);
  CHECK(where < 0.0);
}

TEST_CASE("coupling pushes the symmetric wells apart and the antisymmetric together") {
  const double sep_sym = maxima_separation(figure_profile(Branch::symmetric));
  const double sep_anti = maxima_separation(figure_profile(Branch::antisymmetric));
  const double sep_zero = maxima_separation(figure_profile(Branch::symmetric, 0.0));
  CHECK(sep_zero > 1.8);
  CHECK(sep_zero < 2.0);
  CHECK(sep_sym > sep_zero);
  CHECK(sep_anti < sep_zero);
}

TEST_CASE("branch energies from the stored solution") {
  const PerturbationSolution sol = solve_perturbation(0, 2, Branch::symmetric, figure_config());

  auto [es0, ea0] = eigen_energies(sol, 0.0);
  CHECK(es0 == 0.5);
  CHECK(ea0 == 0.5);

  const double eps = 0.3;
  auto [es, ea] = eigen_energies(sol, eps);
  // odd orders cancel in the sum
  CHECK(std::abs(es + ea - (1.0 + 2.0 * eps * eps * sol.energies[2])) < 1e-14);
  // and survive in the difference
  CHECK(std::abs(es - ea - 2.0 * eps * sol.energies[1]) < 1e-14);
}

TEST_CASE("rabi amplitudes against direct two-level evolution") {
  const PerturbationSolution sol = solve_perturbation(0, 2, Branch::symmetric, figure_config());
  const TwoStateSystem sys = make_two_state(sol, 0.1);
  CHECK(sys.Omega == Catch::Approx(0.5 * (sys.E_s - sys.E_a)).margin(1e-18));

  {
    auto [up, down] = rabi_evolution(sys, 0.0);
    CHECK(std::abs(up) == 0.0);
    CHECK(down == complexd(1.0, 0.0));
  }
  {
    auto [up, down] = rabi_evolution(sys, kPi / (2.0 * sys.Omega));
    CHECK(std::abs(std::abs(up) - 1.0) < 1e-12);
    CHECK(std::abs(down) < 1e-12);
  }

  // oracle: evolve (1,1)/sqrt(2) under diag(E_s, E_a) and project back
  for (int k = 0; k <= 40; ++k) {
    const double t = k * 2.0;
    const complexd ps = std::exp(complexd(0.0, -sys.E_s * t)) / std::sqrt(2.0);
    const complexd pa = std::exp(complexd(0.0, -sys.E_a * t)) / std::sqrt(2.0);
    // |up> = (|s> - |a>)/sqrt(2), |down> = (|s> + |a>)/sqrt(2)
    const complexd amp_up_direct = (ps - pa) / std::sqrt(2.0);
    const complexd amp_down_direct = (ps + pa) / std::sqrt(2.0);
    auto [up, down] = rabi_evolution(sys, t);
    CHECK(std::abs(std::norm(up) - std::norm(amp_up_direct)) < 1e-12);
    CHECK(std::abs(std::norm(down) - std::norm(amp_down_direct)) < 1e-12);
    CHECK(std::abs(std::norm(up) + std::norm(down) - 1.0) < 1e-12);
  }
}

TEST_CASE("cylinder spinor assembly") {
  const SpinorProfile prof = figure_profile(Branch::symmetric);
  const ComplexField f = assemble_cylinder_spinor(prof, 16);
  const double inv = 1.0 / std::sqrt(2.0 * kPi);

  // phi = 0 column is the bare profile
  for (int i = 0; i < f.n_z; i += 97) {
    CHECK(f.at(0, i, 0).real() == Catch::Approx(inv * prof.zplus[i]).margin(1e-15));
    CHECK(f.at(1, i, 0).real() == Catch::Approx(inv * prof.zminus[i]).margin(1e-15));
  }

  // |Psi_+| is phi independent; relative phase between components is phi
  for (int j = 0; j < f.n_phi; ++j) {
    const int i = 700;
    CHECK(std::abs(std::abs(f.at(0, i, j)) - std::abs(f.at(0, i, 0))) < 1e-14);
    const complexd ratio = f.at(1, i, j) / f.at(0, i, j);
    const double expected = prof.zplus[i] * prof.zminus[i] > 0.0 ? f.phi(j)
                                                                 : f.phi(j) + kPi;
    const double got = std::arg(ratio);
    const double diff = std::remainder(got - expected, 2.0 * kPi);
    CHECK(std::abs(diff) < 1e-12);
  }
}
