#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "cylq/config.hpp"
#include "cylq/errors.hpp"
#include "cylq/hermite.hpp"
#include "cylq/jacobi_eigen.hpp"
#include "cylq/sho_basis.hpp"

namespace cylq {
namespace oracle {

/// Truncated matrix of the coupled two-component problem in the number
/// basis: both diagonal blocks are diag(n + 1/2) (each component in its
/// own displaced ladder), the off-diagonal blocks are eps T and eps T^T
/// with T the displaced overlap matrix. Real symmetric by construction.
struct CoupledFockMatrix {
  int block_dim = 0;  // N per component
  double b = 0.0;
  double epsilon = 0.0;
  SymMatrix matrix;   // 2N x 2N
};

inline CoupledFockMatrix build_coupled_matrix(const PhysicsConfig& cfg) {
  const PhysicsConfig c = validate(cfg);
  const int N = c.fock_dim;
  CoupledFockMatrix out;
  out.block_dim = N;
  out.b = c.b;
  out.epsilon = c.epsilon;
  out.matrix = SymMatrix(2 * N);
  const OverlapMatrix T = build_overlap_matrix(N, c.b);
  for (int n = 0; n < N; ++n) {
    out.matrix.at(n, n) = n + 0.5;
    out.matrix.at(N + n, N + n) = n + 0.5;
  }
  for (int n = 0; n < N; ++n) {
    for (int m = 0; m < N; ++m) {
      out.matrix.at(n, N + m) = c.epsilon * T.at(n, m);
      out.matrix.at(N + m, n) = c.epsilon * T.at(n, m);
    }
  }
  return out;
}

/// Dense eigendecomposition by the in-repo Jacobi solver, with a residual
/// check ||Hv - lambda v|| < 1e-10 on every pair.
inline EigenDecomposition exact_spectrum(const CoupledFockMatrix& m) {
  EigenDecomposition d = jacobi_eigensolve(m.matrix);
  const double res = eigen_residual(m.matrix, d);
  if (res > 1e-10) throw consistency_error("eigensolver residual above tolerance");
  return d;
}

/// Signature of the reflect-shift involution on an eigenvector
/// (c+, c-) -> (P c-, P c+) with P = diag((-1)^m). A pure branch vector
/// has c- = +-P c+, giving 2 sum (-1)^m c+_m c-_m = +-1 when normalized:
/// positive for the symmetric branch, negative for the antisymmetric.
inline double branch_signature(const std::vector<double>& v, int block_dim) {
  double acc = 0.0;
  for (int m = 0; m < block_dim; ++m) {
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    acc += sign * v[m] * v[block_dim + m];
  }
  return 2.0 * acc;
}

/// Applies the reflect-shift involution to a coupled-basis vector.
inline std::vector<double> apply_reflection(const std::vector<double>& v, int block_dim) {
  std::vector<double> out(v.size());
  for (int m = 0; m < block_dim; ++m) {
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    out[m] = sign * v[block_dim + m];
    out[block_dim + m] = sign * v[m];
  }
  return out;
}

/// Independent route to the spinless coherent evolution: expand the
/// centered Gaussian in the ladder displaced to -ell b (coefficients
/// e^{-d^2/4} (d/sqrt2)^n / sqrt(n!) with d = ell b), attach phases
/// e^{-i(n+1/2)t} and resum at the requested z samples. Includes the full
/// global phase. Throws if the truncation tail is above 1e-12.
inline std::vector<std::complex<double>> eigenbasis_evolution(int ell, double b, double t,
                                                              const std::vector<double>& z_samples,
                                                              int N) {
  if (N < 2) throw validation_error("fock_dim too small");
  const double d = ell * b;
  std::vector<double> coeff(N);
  double c = std::exp(-d * d / 4.0);
  coeff[0] = c;
  for (int n = 1; n < N; ++n) {
    c *= (d / std::sqrt(2.0)) / std::sqrt(static_cast<double>(n));
    coeff[n] = c;
  }
  if (std::abs(coeff[N - 1]) > 1e-12)
    throw consistency_error("eigenbasis truncation tail above tolerance (increase fock_dim)");

  std::vector<std::complex<double>> phases(N);
  for (int n = 0; n < N; ++n) phases[n] = std::exp(std::complex<double>(0.0, -(n + 0.5) * t));

  const double ang = 1.0 / std::sqrt(2.0 * std::numbers::pi);  // e^{i ell phi} at phi = 0
  std::vector<std::complex<double>> out(z_samples.size());
  for (std::size_t i = 0; i < z_samples.size(); ++i) {
    const std::vector<double> phi = eigenfunctions_upto(N - 1, z_samples[i] + d);
    std::complex<double> acc = 0.0;
    for (int n = 0; n < N; ++n) acc += coeff[n] * phases[n] * phi[n];
    out[i] = acc * ang;
  }
  return out;
}

/// Least-squares slope of log|series - oracle| against log eps; the
/// truncation order K shows up as slope K+1. Residuals at the floating
/// point floor are reported as indistinguishable (a pass).
struct OrderFit {
  double slope = 0.0;
  std::vector<double> residuals;
  bool floor_limited = false;
};

inline OrderFit richardson_order_check(const std::vector<double>& series_energies,
                                       const std::vector<double>& oracle_energies,
                                       const std::vector<double>& eps_list) {
  if (eps_list.size() < 3) throw validation_error("richardson_order_check needs at least 3 points");
  if (series_energies.size() != eps_list.size() || oracle_energies.size() != eps_list.size())
    throw validation_error("richardson_order_check input lengths differ");
  OrderFit fit;
  for (std::size_t i = 0; i < eps_list.size(); ++i) {
    if (!(eps_list[i] > 0.0)) throw validation_error("eps values must be positive");
    fit.residuals.push_back(std::abs(series_energies[i] - oracle_energies[i]));
  }
  bool all_floor = true;
  for (double r : fit.residuals) all_floor = all_floor && r < 1e-13;
  if (all_floor) {
    fit.floor_limited = true;
    return fit;
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const auto npts = static_cast<double>(eps_list.size());
  for (std::size_t i = 0; i < eps_list.size(); ++i) {
    const double x = std::log(eps_list[i]);
    const double y = std::log(std::max(fit.residuals[i], 1e-300));
    sx += x; sy += y; sxx += x * x; sxy += x * y;
  }
  fit.slope = (npts * sxy - sx * sy) / (npts * sxx - sx * sx);
  return fit;
}

}  // namespace oracle
}  // namespace cylq
