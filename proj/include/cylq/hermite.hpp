#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "cylq/errors.hpp"

namespace cylq {

/// Physicists' Hermite polynomials H_n via the three-term recurrence
/// H_{n+1}(z) = 2 z H_n(z) - 2 n H_{n-1}(z).
///
/// Raw H_n values overflow for large n; this evaluator is meant for
/// moderate orders (tests, spot checks). Wavefunction synthesis uses the
/// jointly scaled recurrence below instead.
class HermiteEvaluator {
 public:
  explicit HermiteEvaluator(int max_order) : max_order_(max_order), work_(max_order + 1) {}

  int max_order() const { return max_order_; }

  /// H_n(z); throws if n exceeds max_order.
  double operator()(int n, double z) const {
    if (n < 0 || n > max_order_) throw validation_error("Hermite order exceeds max_order");
    double hm1 = 1.0;  // H_0
    if (n == 0) return hm1;
    double h = 2.0 * z;  // H_1
    for (int k = 1; k < n; ++k) {
      const double hp1 = 2.0 * z * h - 2.0 * k * hm1;
      hm1 = h;
      h = hp1;
    }
    return h;
  }

  /// Fills the cached workspace with H_0..H_max_order at z and returns it.
  const std::vector<double>& all(double z) const {
    work_[0] = 1.0;
    if (max_order_ >= 1) work_[1] = 2.0 * z;
    for (int k = 1; k < max_order_; ++k)
      work_[k + 1] = 2.0 * z * work_[k] - 2.0 * k * work_[k - 1];
    return work_;
  }

 private:
  int max_order_;
  mutable std::vector<double> work_;
};

/// Normalized oscillator eigenfunctions N_n H_n(u) e^{-u^2/2},
/// N_n = (2^n n! sqrt(pi))^{-1/2}, evaluated by the scaled recurrence
///   phi_0 = pi^{-1/4} e^{-u^2/2},  phi_{n+1} = sqrt(2/(n+1)) u phi_n - sqrt(n/(n+1)) phi_{n-1},
/// which stays bounded for all orders.
inline std::vector<double> eigenfunctions_upto(int nmax, double u) {
  if (nmax < 0) throw validation_error("eigenfunction order must be non-negative");
  std::vector<double> phi(nmax + 1);
  phi[0] = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * u * u);
  if (nmax >= 1) phi[1] = std::sqrt(2.0) * u * phi[0];
  for (int n = 1; n < nmax; ++n)
    phi[n + 1] = std::sqrt(2.0 / (n + 1)) * u * phi[n] - std::sqrt(n / (n + 1.0)) * phi[n - 1];
  return phi;
}

/// psi_n centered at `center`: returns N_n H_n(z-center) e^{-(z-center)^2/2}.
inline double eigenfunction(int n, double center, double z) {
  if (n < 0) throw validation_error("eigenfunction order must be non-negative");
  const double u = z - center;
  double p0 = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * u * u);
  if (n == 0) return p0;
  double p1 = std::sqrt(2.0) * u * p0;
  for (int k = 1; k < n; ++k) {
    const double p2 = std::sqrt(2.0 / (k + 1)) * u * p1 - std::sqrt(k / (k + 1.0)) * p0;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

/// Orthonormal Hermite functions without the Gaussian, h_n(u) = N_n H_n(u).
/// Used where the Gaussian weight is accounted for separately (overlap
/// quadrature on the product Gaussian).
inline std::vector<double> scaled_hermite_upto(int nmax, double u) {
  std::vector<double> h(nmax + 1);
  h[0] = std::pow(std::numbers::pi, -0.25);
  if (nmax >= 1) h[1] = std::sqrt(2.0) * u * h[0];
  for (int n = 1; n < nmax; ++n)
    h[n + 1] = std::sqrt(2.0 / (n + 1)) * u * h[n] - std::sqrt(n / (n + 1.0)) * h[n - 1];
  return h;
}

}  // namespace cylq
