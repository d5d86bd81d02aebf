#pragma once

#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

#include "cylq/errors.hpp"

namespace cylq {

/// Dense symmetric matrix stored row-major.
struct SymMatrix {
  int n = 0;
  std::vector<double> a;  // n*n

  SymMatrix() = default;
  explicit SymMatrix(int dim) : n(dim), a(static_cast<std::size_t>(dim) * dim, 0.0) {}
  double& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  double at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

/// Eigendecomposition result: values ascending, vectors[k] is the
/// eigenvector (length n) belonging to values[k].
struct EigenDecomposition {
  std::vector<double> values;
  std::vector<std::vector<double>> vectors;
};

/// Cyclic Jacobi rotations for a real symmetric matrix.
/// Iterates sweeps until the off-diagonal Frobenius norm falls below
/// 1e-15 times the matrix scale; throws consistency_error if 100 sweeps
/// do not converge. Residuals ||Av - lambda v|| are then at rounding level.
inline EigenDecomposition jacobi_eigensolve(const SymMatrix& m) {
  const int n = m.n;
  std::vector<double> a = m.a;
  std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;

  auto A = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
  auto V = [&](int i, int j) -> double& { return v[static_cast<std::size_t>(i) * n + j]; };

  double scale = 0.0;
  for (int i = 0; i < n; ++i) scale = std::max(scale, std::abs(A(i, i)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) scale = std::max(scale, std::abs(A(i, j)));
  if (scale == 0.0) scale = 1.0;

  const int max_sweeps = 100;
  int sweep = 0;
  for (; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += 2.0 * A(i, j) * A(i, j);
    if (std::sqrt(off) <= 1e-15 * scale * n) break;

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = A(p, q);
        if (apq == 0.0) continue;
        const double app = A(p, p), aqq = A(q, q);
        // skip rotations that cannot change anything at working precision
        if (std::abs(apq) <= 1e-18 * (std::abs(app) + std::abs(aqq) + scale)) {
          A(p, q) = A(q, p) = 0.0;
          continue;
        }
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        A(p, p) = app - t * apq;
        A(q, q) = aqq + t * apq;
        A(p, q) = A(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = A(k, p), akq = A(k, q);
          A(k, p) = akp - s * (akq + tau * akp);
          A(p, k) = A(k, p);
          A(k, q) = akq + s * (akp - tau * akq);
          A(q, k) = A(k, q);
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = V(k, p), vkq = V(k, q);
          V(k, p) = vkp - s * (vkq + tau * vkp);
          V(k, q) = vkq + s * (vkp - tau * vkq);
        }
      }
    }
  }
  if (sweep == max_sweeps) throw consistency_error("jacobi eigensolver did not converge");

  EigenDecomposition out;
  out.values.resize(n);
  for (int i = 0; i < n; ++i) out.values[i] = A(i, i);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return out.values[i] < out.values[j]; });
  std::vector<double> sorted(n);
  out.vectors.assign(n, std::vector<double>(n));
  for (int k = 0; k < n; ++k) {
    sorted[k] = out.values[order[k]];
    for (int i = 0; i < n; ++i) out.vectors[k][i] = V(i, order[k]);
  }
  out.values = std::move(sorted);
  return out;
}

/// max_k ||A v_k - lambda_k v_k||_2, for verifying a decomposition.
inline double eigen_residual(const SymMatrix& m, const EigenDecomposition& d) {
  double worst = 0.0;
  for (std::size_t k = 0; k < d.values.size(); ++k) {
    double acc = 0.0;
    for (int i = 0; i < m.n; ++i) {
      double r = 0.0;
      for (int j = 0; j < m.n; ++j) r += m.at(i, j) * d.vectors[k][j];
      r -= d.values[k] * d.vectors[k][i];
      acc += r * r;
    }
    worst = std::max(worst, std::sqrt(acc));
  }
  return worst;
}

}  // namespace cylq
