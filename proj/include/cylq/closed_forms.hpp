#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "cylq/errors.hpp"
#include "cylq/quadrature.hpp"
#include "cylq/series.hpp"
#include "cylq/sho_basis.hpp"

namespace cylq {

/// Entire exponential integral Ein(y) = int_0^1 (1 - e^{-y s})/s ds,
/// summed as the alternating series sum_{j>=1} (-1)^{j+1} y^j / (j j!).
inline double ein(double y) {
  if (!(std::abs(y) < 700.0)) throw validation_error("ein argument out of range (|y| < 700)");
  double sum = 0.0;
  double p = 1.0;  // y^j / j!
  for (int j = 1; j <= 2000; ++j) {
    p *= y / j;
    const double term = ((j % 2 == 1) ? 1.0 : -1.0) * p / j;
    sum += term;
    if (std::abs(term) <= 1e-18 * std::max(1.0, std::abs(sum)) && j > 4) break;
  }
  return sum;
}

/// Ground-level energy coefficients through second order:
///   E0 = 1/2,  E1 = e^{-b^2/4},
///   E2 = e^{-b^2/2} int_0^1 (1 - e^{b^2 s/2})/s ds = e^{-b^2/2} Ein(-b^2/2),
/// which is negative for b > 0.
struct GroundEnergyCorrections {
  double E0;
  double E1;
  double E2;
};

inline GroundEnergyCorrections energy_corrections_closed(double b) {
  if (!(b > 0.0)) throw validation_error("b must be positive");
  return {0.5, std::exp(-b * b / 4.0), std::exp(-b * b / 2.0) * ein(-b * b / 2.0)};
}

namespace detail {

/// exponent of the translated-Gaussian ratio:
///   e^{b^2 s^2/4} e^{-(z+b s)^2/2} = e^{-z^2/2} e^{u(s)},  u = -b z s - b^2 s^2/4.
inline double gaussian_shift_exponent(double b, double z, double s) {
  return -b * z * s - 0.25 * b * b * s * s;
}

}  // namespace detail

/// First-order axial correction (one s-integral):
///   Z1(z) = N0 e^{-b^2/4} int_0^1 ds/s [ e^{-z^2/2} - e^{b^2 s^2/4} e^{-(z+bs)^2/2} ]
///         = -N0 e^{-b^2/4} e^{-z^2/2} int_0^1 ds expm1(u(s))/s.
/// The expm1 form is the analytic cancellation of the apparent s=0 pole,
/// valid at every node.
inline double zplus_first_order_at(double b, double z, const QuadratureRule& rule) {
  const double N0 = std::pow(std::numbers::pi, -0.25);
  const double pref = N0 * std::exp(-0.25 * b * b) * std::exp(-0.5 * z * z);
  const double integral = rule.integrate([&](double s) {
    return -std::expm1(detail::gaussian_shift_exponent(b, z, s)) / s;
  });
  return pref * integral;
}

/// Second-order axial correction (tensor-product double integral).
/// The bracketed four-Gaussian combination is rearranged so each term
/// vanishes linearly in both s1 and s2, removing every cancellation:
///   I/G0 = expm1(b^2 s1/2) expm1(u(s2(1-s1)))
///        + e^{u(s2)} expm1(s1 (b z s2 + b^2 s2^2 (2-s1)/4))
///        - expm1(u(s1 s2)).
inline double zplus_second_order_at(double b, double z, const QuadratureRule& rule) {
  const double N0 = std::pow(std::numbers::pi, -0.25);
  const double pref = N0 * std::exp(-0.5 * b * b) * std::exp(-0.5 * z * z);
  double total = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double s1 = rule.nodes[i];
    double inner = 0.0;
    for (std::size_t j = 0; j < rule.size(); ++j) {
      const double s2 = rule.nodes[j];
      const double u2 = detail::gaussian_shift_exponent(b, z, s2);
      const double uc = detail::gaussian_shift_exponent(b, z, s2 * (1.0 - s1));
      const double ud = detail::gaussian_shift_exponent(b, z, s2 * s1);
      const double delta = s1 * (b * z * s2 + 0.25 * b * b * s2 * s2 * (2.0 - s1));
      const double term = std::expm1(0.5 * b * b * s1) * std::expm1(uc) +
                          std::exp(u2) * std::expm1(delta) - std::expm1(ud);
      inner += rule.weights[j] * term / (s1 * s2);
    }
    total += rule.weights[i] * inner;
  }
  return pref * total;
}

/// Evaluates the order-1 or order-2 correction at each z sample, checking
/// convergence by doubling the rule; throws if any sample moves by more
/// than 1e-8.
inline std::vector<double> zplus_correction(int order, double b,
                                            const std::vector<double>& z_samples,
                                            int quad_nodes = 64) {
  if (order != 1 && order != 2) throw validation_error("zplus_correction order must be 1 or 2");
  if (!(b > 0.0)) throw validation_error("b must be positive");
  const QuadratureRule rule = gauss_legendre_01(quad_nodes);
  const QuadratureRule fine = gauss_legendre_01(2 * quad_nodes);
  std::vector<double> out(z_samples.size());
  for (std::size_t i = 0; i < z_samples.size(); ++i) {
    const double z = z_samples[i];
    const double coarse = (order == 1) ? zplus_first_order_at(b, z, rule)
                                       : zplus_second_order_at(b, z, rule);
    const double refined = (order == 1) ? zplus_first_order_at(b, z, fine)
                                        : zplus_second_order_at(b, z, fine);
    if (std::abs(coarse - refined) > 1e-8)
      throw consistency_error("zplus_correction quadrature not converged at requested node count");
    out[i] = refined;
  }
  return out;
}

/// First-order correction assembled the standard perturbation-theory way:
/// number-basis coefficients overlap_row0(k, b)/(E_0 - E_k) with
/// E_0 - E_k = -k, converted to the power-series representation
/// (coefficient of x^k = gamma_k / sqrt(k!)). Truncated at k_max; the
/// factorially decaying magnitude of the last term is reported alongside.
struct AppendixFirstOrder {
  TruncatedSeries series;
  double tail_bound = 0.0;
};

inline AppendixFirstOrder appendix_first_order(double b, int k_max) {
  if (k_max < 1) throw validation_error("k_max must be at least 1");
  AppendixFirstOrder out;
  out.series = TruncatedSeries(k_max);
  double sqrt_fact = 1.0;  // sqrt(k!)
  for (int k = 1; k <= k_max; ++k) {
    sqrt_fact *= std::sqrt(static_cast<double>(k));
    const double gamma = overlap_row0(k, b) / (-static_cast<double>(k));
    out.series[k] = gamma / sqrt_fact;
  }
  out.tail_bound = std::abs(out.series[k_max]);
  return out;
}

}  // namespace cylq
