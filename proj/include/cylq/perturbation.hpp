#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "cylq/config.hpp"
#include "cylq/errors.hpp"
#include "cylq/hermite.hpp"
#include "cylq/series.hpp"
#include "cylq/spinor_profile.hpp"

namespace cylq {

/// Order-by-order solution for unperturbed level n: energy coefficients
/// E[k] and series f[k] with f(x) acting on the ground state through
/// powers of the raising operator. The stored data are coupling-sign
/// independent; the branch enters only when energies or wavefunctions are
/// evaluated at a concrete coupling.
struct PerturbationSolution {
  int level = 0;    // n
  int order = 0;    // K
  double b = 0.0;
  std::vector<double> energies;        // E[0..K]
  std::vector<TruncatedSeries> series; // f[0..K]
  Branch branch = Branch::symmetric;

  /// Effective coupling for this solution's branch: the antisymmetric
  /// branch is the symmetric one evaluated at -epsilon.
  double effective_coupling(double epsilon) const { return branch_sign(branch) * epsilon; }

  /// E(eps) = sum_k (branch-signed eps)^k E[k].
  double energy_at(double epsilon) const {
    const double e = effective_coupling(epsilon);
    double acc = 0.0, p = 1.0;
    for (int k = 0; k <= order; ++k) {
      acc += p * energies[k];
      p *= e;
    }
    return acc;
  }
};

namespace detail {

inline double sqrt_factorial(int n) {
  double s = 1.0;
  for (int j = 2; j <= n; ++j) s *= std::sqrt(static_cast<double>(j));
  return s;
}

/// Right-hand side without the energy term:
///   S(x) = -e^{-b^2/4} e^{-(b/sqrt2) x} f_{k-1}(-x - b/sqrt2)
///          + sum_{m=1}^{k-1} E^{(k-m)} f^{(m)}(x).
inline TruncatedSeries recursion_rhs(const PerturbationSolution& prior, int k, double b) {
  const int D = prior.series[0].degree();
  const double c = b / std::sqrt(2.0);
  TruncatedSeries S = series_scale(
      series_multiply(series_exp_linear(-c, D), series_reflect_shift(prior.series[k - 1], c)),
      -std::exp(-b * b / 4.0));
  for (int m = 1; m <= k - 1; ++m)
    S = series_add(S, series_scale(prior.series[m], prior.energies[k - m]));
  return S;
}

/// Closed finite sum for the energy coefficient: the x^n Taylor
/// coefficient of e^{-cx} f(-x-c) written with the Leibniz rule,
///   E^{(k)} = (1/sqrt(n!)) e^{-b^2/4}
///             sum_r C(n,r) (-c)^{n-r} (-1)^r (d^r f)( -c ),
/// the (-1)^r carrying the inner derivative of the reflected argument.
inline double energy_closed_sum(int n, const TruncatedSeries& f_prev, double b) {
  const double c = b / std::sqrt(2.0);
  double binom = 1.0;  // C(n, r)
  double cpow = std::pow(-c, n);
  double total = 0.0;
  TruncatedSeries deriv = f_prev;
  for (int r = 0; r <= n; ++r) {
    if (r > 0) {
      binom = binom * (n - r + 1) / r;
      cpow /= -c;
      deriv = series_derivative(deriv);
    }
    const double sign = (r % 2 == 0) ? 1.0 : -1.0;
    total += binom * cpow * sign * deriv.eval(-c);
  }
  return std::exp(-b * b / 4.0) / sqrt_factorial(n) * total;
}

}  // namespace detail

/// One order of the recursion. `prior` holds orders 0..k-1; returns
/// (E^{(k)}, f^{(k)}) where E^{(k)} is fixed by requiring the x^n
/// component of the right-hand side to vanish and f^{(k)} solves
/// x f' - n f = RHS coefficientwise, a_m = r_m/(m-n), a_n = 0.
/// The energy is computed independently through the closed finite sum
/// and the two values must agree to 1e-10.
inline std::pair<double, TruncatedSeries> recursion_step(int n, int k,
                                                         const PerturbationSolution& prior,
                                                         double b) {
  if (k < 1) throw validation_error("recursion_step requires k >= 1");
  if (static_cast<int>(prior.series.size()) < k)
    throw validation_error("recursion_step: prior solution is missing lower orders");
  const int D = prior.series[0].degree();

  TruncatedSeries S = detail::recursion_rhs(prior, k, b);
  const double sf = detail::sqrt_factorial(n);
  const double energy = -sf * S[n];

  const double closed = detail::energy_closed_sum(n, prior.series[k - 1], b);
  if (std::abs(energy - closed) > 1e-10 * std::max(1.0, std::abs(energy)))
    throw consistency_error(
        "energy cross-check mismatch between coefficient extraction and closed sum "
        "(series_degree too low)");

  TruncatedSeries rhs = S;
  rhs[n] += energy / sf;
  TruncatedSeries f(D);
  for (int m = 0; m <= D; ++m)
    if (m != n) f[m] = rhs[m] / (m - n);
  f[n] = 0.0;  // normalization: no component along the unperturbed level
  return {energy, f};
}

/// Runs the recursion through order K for level n. The resulting series
/// must satisfy the tail bound |coeffs[D]| (b/sqrt2)^D < 1e-12, otherwise
/// the degree is too low for the requested parameters.
inline PerturbationSolution solve_perturbation(int n, int K, Branch branch,
                                               const PhysicsConfig& cfg) {
  if (n < 0) throw validation_error("level must be non-negative");
  if (K < 0) throw validation_error("series_order must be non-negative");
  const PhysicsConfig c = validate(cfg);
  const int D = c.series_degree;
  if (n > D) throw validation_error("series_degree must be at least the level n");

  PerturbationSolution sol;
  sol.level = n;
  sol.order = K;
  sol.b = c.b;
  sol.branch = branch;
  sol.energies.push_back(n + 0.5);
  TruncatedSeries f0(D);
  f0[n] = 1.0 / detail::sqrt_factorial(n);
  sol.series.push_back(f0);

  const double x_eval = c.b / std::sqrt(2.0);
  for (int k = 1; k <= K; ++k) {
    auto [energy, f] = recursion_step(n, k, sol, c.b);
    if (series_tail_bound(f, x_eval) >= 1e-12)
      throw consistency_error("series tail bound violated at order " + std::to_string(k) +
                              " (increase series_degree)");
    sol.energies.push_back(energy);
    sol.series.push_back(std::move(f));
  }
  return sol;
}

/// Unnormalized Z_+ at a point of the level-n ladder frame (centered
/// coordinate u): sum_k eps_eff^k sum_m f_k[m] sqrt(m!) psi_m(u).
inline double evaluate_zplus(const PerturbationSolution& sol, double eps_eff, double u) {
  const int D = sol.series[0].degree();
  const std::vector<double> phi = eigenfunctions_upto(D, u);
  double acc = 0.0;
  double p = 1.0;
  for (int k = 0; k <= sol.order; ++k) {
    double term = 0.0;
    double sf = 1.0;  // sqrt(m!)
    for (int m = 0; m <= D; ++m) {
      if (m > 0) sf *= std::sqrt(static_cast<double>(m));
      if (!std::isfinite(sf)) throw consistency_error("series_degree too large for synthesis");
      const double cm = sol.series[k][m];
      if (cm != 0.0) term += cm * sf * phi[m];
    }
    acc += p * term;
    p *= eps_eff;
  }
  return acc;
}

/// Synthesizes the sampled two-component profile on a uniform grid.
/// Z_+(z) follows from the series, Z_-(z) = (branch sign) Z_+(-z - b) in
/// the level frame; for ell != 0 the frame coordinate is u = z + ell b.
/// The profile is normalized so that sum (Z+^2 + Z-^2) dz = 1, and the
/// per-order contribution norms are recorded; a non-decreasing step sets
/// converging = false (expansion outside its comfortable range).
inline SpinorProfile synthesize_wavefunction(const PerturbationSolution& sol, double epsilon,
                                             double z_min, double z_max, int n_samples,
                                             int ell = 0) {
  if (n_samples < 2) throw validation_error("n_z must be at least 2");
  if (!(z_min < z_max)) throw validation_error("z_range must be finite and nonempty");
  const double eps_eff = sol.effective_coupling(epsilon);
  const double sign = branch_sign(sol.branch);

  SpinorProfile prof;
  prof.ell = ell;
  prof.branch = sol.branch;
  prof.energy = sol.energy_at(epsilon);
  prof.z.resize(n_samples);
  prof.zplus.resize(n_samples);
  prof.zminus.resize(n_samples);
  const double dz = (z_max - z_min) / (n_samples - 1);
  for (int i = 0; i < n_samples; ++i) {
    const double z = z_min + i * dz;
    const double u = z + ell * sol.b;
    prof.z[i] = z;
    prof.zplus[i] = evaluate_zplus(sol, eps_eff, u);
    prof.zminus[i] = sign * evaluate_zplus(sol, eps_eff, -u - sol.b);
  }

  // per-order L2 contributions |eps|^k ||f_k||, ||f||^2 = sum c_m^2 m!
  double p = 1.0;
  for (int k = 0; k <= sol.order; ++k) {
    double norm2 = 0.0, fact = 1.0;
    for (int m = 0; m <= sol.series[k].degree(); ++m) {
      if (m > 0) fact *= m;
      const double cm = sol.series[k][m];
      norm2 += cm * cm * fact;
    }
    prof.term_norms.push_back(std::abs(p) * std::sqrt(norm2));
    p *= eps_eff;
  }
  for (std::size_t k = 1; k + 1 < prof.term_norms.size(); ++k)
    if (prof.term_norms[k + 1] >= prof.term_norms[k] && prof.term_norms[k] > 0.0)
      prof.converging = false;

  double norm = 0.0;
  for (int i = 0; i < n_samples; ++i)
    norm += (prof.zplus[i] * prof.zplus[i] + prof.zminus[i] * prof.zminus[i]) * dz;
  if (!(norm > 0.0)) throw consistency_error("profile norm vanished on the sampling grid");
  const double scale = 1.0 / std::sqrt(norm);
  for (int i = 0; i < n_samples; ++i) {
    prof.zplus[i] *= scale;
    prof.zminus[i] *= scale;
  }
  prof.normalized = true;
  return prof;
}

}  // namespace cylq
