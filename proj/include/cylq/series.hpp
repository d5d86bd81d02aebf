#pragma once

#include <cmath>
#include <vector>

#include "cylq/errors.hpp"

namespace cylq {

/// Polynomial in x truncated at a fixed degree D: coeffs[m] multiplies x^m.
/// All algebra truncates products back to D. In the perturbation engine x
/// stands for the raising operator acting on the ground state.
struct TruncatedSeries {
  std::vector<double> coeffs;

  TruncatedSeries() = default;
  explicit TruncatedSeries(int degree) : coeffs(degree + 1, 0.0) {
    if (degree < 0) throw validation_error("series degree must be non-negative");
  }

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  double operator[](int m) const { return coeffs[m]; }
  double& operator[](int m) { return coeffs[m]; }

  /// Horner evaluation at x.
  double eval(double x) const {
    double acc = 0.0;
    for (int m = degree(); m >= 0; --m) acc = acc * x + coeffs[m];
    return acc;
  }
};

inline void require_same_degree(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.degree() != b.degree()) throw validation_error("series degree mismatch");
}

inline TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_degree(a, b);
  TruncatedSeries out(a.degree());
  for (int m = 0; m <= a.degree(); ++m) out[m] = a[m] + b[m];
  return out;
}

inline TruncatedSeries series_scale(const TruncatedSeries& a, double s) {
  TruncatedSeries out(a.degree());
  for (int m = 0; m <= a.degree(); ++m) out[m] = s * a[m];
  return out;
}

/// Cauchy product truncated at the common degree.
inline TruncatedSeries series_multiply(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_degree(a, b);
  const int D = a.degree();
  TruncatedSeries out(D);
  for (int i = 0; i <= D; ++i) {
    if (a[i] == 0.0) continue;
    for (int j = 0; j + i <= D; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

/// Series of e^{lambda x}: coefficients lambda^k / k!.
inline TruncatedSeries series_exp_linear(double lambda, int D) {
  if (D < 1) throw validation_error("series_degree must be at least 1");
  TruncatedSeries out(D);
  double t = 1.0;
  for (int k = 0; k <= D; ++k) {
    out[k] = t;
    t *= lambda / (k + 1);
  }
  return out;
}

/// Exact binomial re-expansion of f(-x-c), degree preserved:
///   g_m = sum_{p>=m} f_p (-1)^p C(p,m) c^{p-m}.
/// Applying it twice with the same c is the identity.
inline TruncatedSeries series_reflect_shift(const TruncatedSeries& f, double c) {
  const int D = f.degree();
  // Pascal triangle in doubles; values up to C(D, D/2).
  std::vector<std::vector<double>> binom(D + 1);
  for (int p = 0; p <= D; ++p) {
    binom[p].assign(p + 1, 1.0);
    for (int m = 1; m < p; ++m) binom[p][m] = binom[p - 1][m - 1] + binom[p - 1][m];
  }
  TruncatedSeries g(D);
  for (int m = 0; m <= D; ++m) {
    double acc = 0.0;
    double cpow = 1.0;  // c^{p-m}
    for (int p = m; p <= D; ++p) {
      const double sign = (p % 2 == 0) ? 1.0 : -1.0;
      acc += f[p] * sign * binom[p][m] * cpow;
      cpow *= c;
    }
    g[m] = acc;
  }
  return g;
}

/// r-th derivative of the polynomial, degree preserved (top coeffs zero).
inline TruncatedSeries series_derivative(const TruncatedSeries& f, int r = 1) {
  TruncatedSeries out = f;
  for (int pass = 0; pass < r; ++pass) {
    for (int m = 0; m < out.degree(); ++m) out[m] = (m + 1) * out[m + 1];
    out[out.degree()] = 0.0;
  }
  return out;
}

/// Tail estimate |coeffs[D]| x_max^D used as the truncation health check.
inline double series_tail_bound(const TruncatedSeries& f, double x_max) {
  return std::abs(f[f.degree()]) * std::pow(std::abs(x_max), f.degree());
}

}  // namespace cylq
