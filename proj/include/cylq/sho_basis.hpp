#pragma once

#include <cmath>
#include <vector>

#include "cylq/errors.hpp"
#include "cylq/hermite.hpp"
#include "cylq/quadrature.hpp"

namespace cylq {

/// Closed-form row-0 displaced overlap:
///   overlap_row0(k, b) = (1/sqrt(k!)) (-b/sqrt(2))^k e^{-b^2/4}
///     = int psi_0(z+b) psi_k(z) dz,
/// the expansion coefficient of the ground state displaced to -b in the
/// centered number basis. Accepts signed b (displacement direction).
inline double overlap_row0(int k, double b) {
  if (k < 0) throw validation_error("overlap_row0 order must be non-negative");
  const double c = -b / std::sqrt(2.0);
  double coeff = std::exp(-b * b / 4.0);
  for (int j = 1; j <= k; ++j) coeff *= c / std::sqrt(static_cast<double>(j));
  return coeff;
}

/// Displaced-state overlap matrix
///   T[n][m] = int psi_n(z+b) psi_m(z) dz
/// (state n displaced to center -b against state m centered at 0).
/// Row 0 equals overlap_row0(m, b); entries satisfy |T| <= 1 and the
/// index-swap relation T[m][n] = (-1)^{n+m} T[n][m].
struct OverlapMatrix {
  int dim = 0;
  double displacement = 0.0;
  std::vector<double> entries;  // dim*dim row-major

  double at(int n, int m) const { return entries[static_cast<std::size_t>(n) * dim + m]; }
};

/// Builds the N x N overlap matrix by Gauss-Hermite quadrature on the
/// product Gaussian: with z = u - b/2 the integrand is
///   h_n(u+b/2) h_m(u-b/2) e^{-u^2} e^{-b^2/4},
/// exact for the rule size used (N+8 nodes covers degree 2N-2).
/// The computed row 0 is checked against overlap_row0 to 1e-10.
inline OverlapMatrix build_overlap_matrix(int N, double b) {
  if (N < 1) throw validation_error("overlap matrix dimension must be at least 1");
  OverlapMatrix T;
  T.dim = N;
  T.displacement = b;
  T.entries.assign(static_cast<std::size_t>(N) * N, 0.0);

  const HermiteRule rule = gauss_hermite(N + 8);
  const double gauss = std::exp(-b * b / 4.0);
  std::vector<std::vector<double>> hplus(rule.nodes.size()), hminus(rule.nodes.size());
  for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
    hplus[q] = scaled_hermite_upto(N - 1, rule.nodes[q] + 0.5 * b);
    hminus[q] = scaled_hermite_upto(N - 1, rule.nodes[q] - 0.5 * b);
  }
  for (int n = 0; n < N; ++n) {
    for (int m = 0; m < N; ++m) {
      double acc = 0.0;
      for (std::size_t q = 0; q < rule.nodes.size(); ++q)
        acc += rule.weights[q] * hplus[q][n] * hminus[q][m];
      T.entries[static_cast<std::size_t>(n) * N + m] = gauss * acc;
    }
  }
  for (int m = 0; m < N; ++m) {
    if (std::abs(T.at(0, m) - overlap_row0(m, b)) > 1e-10)
      throw consistency_error("overlap matrix row 0 disagrees with closed form (quadrature not converged)");
  }
  return T;
}

}  // namespace cylq
