#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "cylq/errors.hpp"
#include "cylq/jacobi_eigen.hpp"

namespace cylq {

/// Quadrature nodes and weights on [0,1] (Gauss-Legendre).
/// Weights sum to 1; exact for polynomials up to degree 2n-1.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }

  template <typename F>
  double integrate(F&& f) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
    return acc;
  }
};

/// Gauss-Legendre rule mapped to [0,1]. Nodes by Newton iteration on P_n
/// with the usual Chebyshev initial guesses; converges to machine precision.
inline QuadratureRule gauss_legendre_01(int n) {
  if (n < 2) throw validation_error("quad_nodes must be at least 2");
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int mid = (n + 1) / 2;
  for (int i = 0; i < mid; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 1; k < n; ++k) {
        const double p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    // refine once more for a clean double
    {
      double p0 = 1.0, p1 = x;
      for (int k = 1; k < n; ++k) {
        const double p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      x -= p1 / pp;
    }
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.nodes[i] = 0.5 * (1.0 - x);  // descending x -> ascending node
    rule.nodes[n - 1 - i] = 0.5 * (1.0 + x);
    rule.weights[i] = 0.5 * w;
    rule.weights[n - 1 - i] = 0.5 * w;
  }
  return rule;
}

/// Gauss-Hermite rule for integrals of the form  int f(u) e^{-u^2} du.
/// Nodes/weights via Golub-Welsch on the Hermite Jacobi matrix
/// (off-diagonal sqrt(k/2)), eigensolved by the in-repo Jacobi routine.
struct HermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  template <typename F>
  double integrate(F&& f) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
    return acc;
  }
};

inline HermiteRule gauss_hermite(int n) {
  if (n < 1) throw validation_error("gauss_hermite needs at least one node");
  SymMatrix J(n);
  for (int k = 1; k < n; ++k) {
    const double beta = std::sqrt(0.5 * k);
    J.at(k - 1, k) = beta;
    J.at(k, k - 1) = beta;
  }
  const EigenDecomposition d = jacobi_eigensolve(J);
  HermiteRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double mu0 = std::sqrt(std::numbers::pi);
  for (int k = 0; k < n; ++k) {
    rule.nodes[k] = d.values[k];
    const double v0 = d.vectors[k][0];
    rule.weights[k] = mu0 * v0 * v0;
  }
  return rule;
}

}  // namespace cylq
