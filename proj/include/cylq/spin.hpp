#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <utility>
#include <vector>

#include "cylq/errors.hpp"
#include "cylq/perturbation.hpp"
#include "cylq/spinless.hpp"
#include "cylq/spinor_profile.hpp"

namespace cylq {

/// Probability density and spin direction along the axis:
///   rho = sqrt(Z+^2 + Z-^2), alpha = 2 arctan(|Z-|/|Z+|) in [0, pi],
///   beta = phi, shifted by pi where the two real components have
///   opposite signs (the spin then points along -rho_hat).
/// Samples where both components vanish get alpha from the neighboring
/// samples and are flagged.
struct SpinField {
  std::vector<double> z;
  std::vector<double> rho;
  std::vector<double> alpha;
  std::vector<double> beta;
  std::vector<bool> flagged;

  /// Unit spin direction (sin a cos b, sin a sin b, cos a) at sample i.
  std::array<double, 3> direction(std::size_t i) const {
    const double sa = std::sin(alpha[i]);
    return {sa * std::cos(beta[i]), sa * std::sin(beta[i]), std::cos(alpha[i])};
  }
};

inline SpinField spin_field(const SpinorProfile& profile, double phi) {
  const std::size_t n = profile.z.size();
  SpinField out;
  out.z = profile.z;
  out.rho.resize(n);
  out.alpha.assign(n, std::numeric_limits<double>::quiet_NaN());
  out.beta.resize(n);
  out.flagged.assign(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const double zp = profile.zplus[i], zm = profile.zminus[i];
    out.rho[i] = std::sqrt(zp * zp + zm * zm);
    out.beta[i] = (zp * zm < 0.0) ? phi + std::numbers::pi : phi;
    if (out.rho[i] == 0.0) {
      out.flagged[i] = true;  // alpha undefined here; filled below
      continue;
    }
    out.alpha[i] = 2.0 * std::atan2(std::abs(zm), std::abs(zp));
  }
  // fill flagged samples with the nearest defined neighbor's value (the
  // limiting direction along the axis)
  for (std::size_t i = 0; i < n; ++i) {
    if (!out.flagged[i]) continue;
    double value = std::numbers::pi / 2.0;
    for (std::size_t d = 1; d < n; ++d) {
      if (i >= d && !out.flagged[i - d]) { value = out.alpha[i - d]; break; }
      if (i + d < n && !out.flagged[i + d]) { value = out.alpha[i + d]; break; }
    }
    out.alpha[i] = value;
  }
  return out;
}

/// Branch energies from one stored solution:
///   E_s = sum eps^k E[k],  E_a = sum (-eps)^k E[k].
inline std::pair<double, double> eigen_energies(const PerturbationSolution& sol, double epsilon) {
  double es = 0.0, ea = 0.0, p = 1.0, q = 1.0;
  for (int k = 0; k <= sol.order; ++k) {
    es += p * sol.energies[k];
    ea += q * sol.energies[k];
    p *= epsilon;
    q *= -epsilon;
  }
  return {es, ea};
}

/// Ground-level pair prepared as (symmetric + antisymmetric)/sqrt(2):
/// the particle starts spin-down, localized at z = -b, and beats between
/// the wells with Rabi frequency Omega = (E_s - E_a)/2.
struct TwoStateSystem {
  double E_s = 0.0;
  double E_a = 0.0;
  double Omega = 0.0;
};

inline TwoStateSystem make_two_state(const PerturbationSolution& sol, double epsilon) {
  auto [es, ea] = eigen_energies(sol, epsilon);
  return {es, ea, 0.5 * (es - ea)};
}

/// Amplitudes at time t with the common dynamical phase
/// e^{-i (E_s+E_a) t / 2} factored out:
///   amp_up = -i sin(Omega t),  amp_down = cos(Omega t),
/// so P_up = sin^2, P_down = cos^2 and they sum to one.
inline std::pair<complexd, complexd> rabi_evolution(const TwoStateSystem& sys, double t) {
  return {complexd(0.0, -std::sin(sys.Omega * t)), complexd(std::cos(sys.Omega * t), 0.0)};
}

/// Full spinor on the cylinder grid:
///   Psi_+ = e^{i ell phi} Z_+(z)/sqrt(2 pi),
///   Psi_- = e^{i (ell+1) phi} Z_-(z)/sqrt(2 pi);
/// the extra angular factor on the lower component makes the spin
/// direction co-rotate with phi.
inline ComplexField assemble_cylinder_spinor(const SpinorProfile& profile, int n_phi) {
  const int n_z = static_cast<int>(profile.z.size());
  if (n_z < 2) throw validation_error("profile needs at least 2 samples");
  ComplexField field = ComplexField::make(2, n_phi, n_z, profile.z.front(), profile.z.back());
  const double inv = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  for (int i = 0; i < n_z; ++i) {
    for (int j = 0; j < n_phi; ++j) {
      const double phi = field.phi(j);
      field.at(0, i, j) = inv * profile.zplus[i] * std::exp(complexd(0.0, profile.ell * phi));
      field.at(1, i, j) = inv * profile.zminus[i] * std::exp(complexd(0.0, (profile.ell + 1) * phi));
    }
  }
  return field;
}

/// Locations of the local maxima of the probability density rho^2,
/// refined by a parabolic fit through the three samples around each peak.
inline std::vector<double> density_maxima(const SpinorProfile& profile) {
  const std::size_t n = profile.z.size();
  std::vector<double> r2(n);
  double peak = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    r2[i] = profile.zplus[i] * profile.zplus[i] + profile.zminus[i] * profile.zminus[i];
    peak = std::max(peak, r2[i]);
  }
  std::vector<double> out;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (!(r2[i] > r2[i - 1] && r2[i] >= r2[i + 1])) continue;
    if (r2[i] < 1e-6 * peak) continue;
    const double denom = r2[i - 1] - 2.0 * r2[i] + r2[i + 1];
    double zp = profile.z[i];
    if (denom < 0.0)
      zp += 0.5 * (r2[i - 1] - r2[i + 1]) / denom * (profile.z[i + 1] - profile.z[i]);
    out.push_back(zp);
  }
  return out;
}

/// Distance between the outermost density maxima; 0 when the profile has
/// a single bump.
inline double maxima_separation(const SpinorProfile& profile) {
  const std::vector<double> m = density_maxima(profile);
  return m.size() < 2 ? 0.0 : m.back() - m.front();
}

}  // namespace cylq
