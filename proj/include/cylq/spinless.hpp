#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <utility>
#include <vector>

#include "cylq/errors.hpp"

namespace cylq {

using complexd = std::complex<double>;

/// Fourier modes f_ell of an angular profile f(phi) = sum f_ell e^{i ell phi}.
struct AngularProfile {
  std::vector<std::pair<int, complexd>> modes;  // sorted by ell, unique

  void set(int ell, complexd amplitude) {
    auto it = std::lower_bound(modes.begin(), modes.end(), ell,
                               [](const auto& m, int e) { return m.first < e; });
    if (it != modes.end() && it->first == ell)
      it->second = amplitude;
    else
      modes.insert(it, {ell, amplitude});
  }

  complexd reconstruct(double phi) const {
    complexd acc = 0.0;
    for (const auto& [ell, f] : modes) acc += f * std::exp(complexd(0.0, ell * phi));
    return acc;
  }

  int min_ell() const { return modes.empty() ? 0 : modes.front().first; }
  int max_ell() const { return modes.empty() ? 0 : modes.back().first; }
};

/// Complex amplitude sampled on the (phi, z) grid, one component for the
/// spinless field and two for a spinor. phi_j = 2 pi j / n_phi,
/// z_i = z_min + i (z_max - z_min)/(n_z - 1). Storage index iz*n_phi + iphi.
struct ComplexField {
  int n_phi = 0;
  int n_z = 0;
  double z_min = 0.0;
  double z_max = 0.0;
  std::vector<std::vector<complexd>> components;

  static ComplexField make(int components_count, int nphi, int nz, double zmin, double zmax) {
    if (nphi < 2 || nz < 2) throw validation_error("grid must be at least 2x2");
    if (!(zmin < zmax)) throw validation_error("z_range must be finite and nonempty");
    ComplexField f;
    f.n_phi = nphi;
    f.n_z = nz;
    f.z_min = zmin;
    f.z_max = zmax;
    f.components.assign(components_count,
                        std::vector<complexd>(static_cast<std::size_t>(nphi) * nz));
    return f;
  }

  double phi(int j) const { return 2.0 * std::numbers::pi * j / n_phi; }
  double z(int i) const { return z_min + i * (z_max - z_min) / (n_z - 1); }
  double dz() const { return (z_max - z_min) / (n_z - 1); }
  double dphi() const { return 2.0 * std::numbers::pi / n_phi; }

  complexd& at(int comp, int iz, int iphi) {
    return components[comp][static_cast<std::size_t>(iz) * n_phi + iphi];
  }
  complexd at(int comp, int iz, int iphi) const {
    return components[comp][static_cast<std::size_t>(iz) * n_phi + iphi];
  }

  /// Discrete norm  sum |Psi|^2 dphi dz over all components.
  double discrete_norm() const {
    double acc = 0.0;
    for (const auto& comp : components)
      for (const complexd& v : comp) acc += std::norm(v);
    return acc * dphi() * dz();
  }
};

/// Spectrum of the uncoupled problem: E = n + 1/2, independent of ell
/// (each angular sector carries a full oscillator ladder).
inline double energy(int n, int /*ell*/) {
  if (n < 0) throw validation_error("level must be non-negative");
  return n + 0.5;
}

/// Coherent-state evolution of the initial centered Gaussian in angular
/// sector ell:
///   Psi(phi,z,t) = N0 e^{-it/2} e^{-i(z+ell b) ell b sin t}
///                  e^{-(z + ell b (1-cos t))^2/2} e^{i ell phi}/sqrt(2 pi).
/// A physically irrelevant global phase (see omitted_global_phase) is
/// dropped from this expression.
inline complexd coherent_evolution(int ell, double b, double t, double phi, double z) {
  const double N0 = std::pow(std::numbers::pi, -0.25);
  const double lb = ell * b;
  const double center_shift = z + lb * (1.0 - std::cos(t));
  const complexd dyn = std::exp(complexd(0.0, -0.5 * t));
  const complexd chirp = std::exp(complexd(0.0, -(z + lb) * lb * std::sin(t)));
  const complexd ang = std::exp(complexd(0.0, ell * phi));
  return N0 * dyn * chirp * std::exp(-0.5 * center_shift * center_shift) * ang /
         std::sqrt(2.0 * std::numbers::pi);
}

/// The global phase e^{i ell^2 b^2 sin(2t)/4} omitted from
/// coherent_evolution; multiplying it back reinstates the exact state.
inline complexd omitted_global_phase(int ell, double b, double t) {
  return std::exp(complexd(0.0, ell * ell * b * b * std::sin(2.0 * t) / 4.0));
}

/// Half-period peak separation requires the mode Gaussians (unit width)
/// to be well apart: b at least 4 widths.
inline bool separation_ok(double b) { return b >= 4.0; }

/// Superposition sum_ell f_ell Psi_ell(phi,z,t) sampled on a grid.
/// At t = pi each mode sits at z = -2 ell b with peak amplitude
/// proportional to |f_ell|.
inline ComplexField fourier_transform_protocol(const AngularProfile& profile, double b, double t,
                                               int n_phi, int n_z, double z_min, double z_max) {
  ComplexField field = ComplexField::make(1, n_phi, n_z, z_min, z_max);
  for (int i = 0; i < n_z; ++i) {
    const double z = field.z(i);
    for (const auto& [ell, f] : profile.modes) {
      if (f == 0.0) continue;
      // phi dependence is a pure phase per mode; evaluate once at phi=0
      const complexd base = f * coherent_evolution(ell, b, t, 0.0, z);
      for (int j = 0; j < n_phi; ++j)
        field.at(0, i, j) += base * std::exp(complexd(0.0, ell * field.phi(j)));
    }
  }
  return field;
}

/// z range that keeps every mode's oscillation (centers between 0 and
/// -2 ell b) plus an 8-width margin inside the grid.
inline std::pair<double, double> protocol_z_range(const AngularProfile& profile, double b,
                                                  double margin = 8.0) {
  double lo = 0.0, hi = 0.0;
  for (const auto& [ell, f] : profile.modes) {
    lo = std::min(lo, -2.0 * ell * b);
    hi = std::max(hi, -2.0 * ell * b);
  }
  return {lo - margin, hi + margin};
}

/// One measured mode from the half-period field.
struct ModeAmplitude {
  int ell = 0;
  double z_peak = 0.0;
  double amplitude = 0.0;  ///< raw |Psi| peak height (homogeneous in f)
  double normalized = 0.0; ///< amplitude / largest amplitude
};

/// Reads mode amplitudes off the t = pi field along the phi = 0 line:
/// local maxima of |Psi| above `threshold` times the global maximum are
/// refined by a log-parabolic fit (exact for a Gaussian peak) and mapped
/// to ell = round(-z/2b). Errors if the separation condition is violated
/// or two peaks land on the same ell.
inline std::vector<ModeAmplitude> extract_modes(const ComplexField& field, double b,
                                                double threshold = 1e-3) {
  if (!separation_ok(b))
    throw consistency_error("extract_modes: peak separation violated (b < 4 widths)");
  const int nz = field.n_z;
  std::vector<double> mag(nz);
  double global_max = 0.0;
  for (int i = 0; i < nz; ++i) {
    mag[i] = std::abs(field.at(0, i, 0));
    global_max = std::max(global_max, mag[i]);
  }
  if (global_max == 0.0) throw consistency_error("extract_modes: field is identically zero");

  std::vector<ModeAmplitude> out;
  for (int i = 1; i + 1 < nz; ++i) {
    if (!(mag[i] > mag[i - 1] && mag[i] >= mag[i + 1])) continue;
    if (mag[i] < threshold * global_max) continue;
    double zp = field.z(i), height = mag[i];
    if (mag[i - 1] > 0.0 && mag[i + 1] > 0.0) {
      const double la = std::log(mag[i - 1]), lb_ = std::log(mag[i]), lc = std::log(mag[i + 1]);
      const double denom = la - 2.0 * lb_ + lc;
      if (denom < 0.0) {
        const double shift = 0.5 * (la - lc) / denom;
        zp += shift * field.dz();
        height = std::exp(lb_ - 0.25 * (la - lc) * shift);
      }
    }
    ModeAmplitude m;
    m.ell = static_cast<int>(std::llround(-zp / (2.0 * b)));
    m.z_peak = zp;
    m.amplitude = height;
    if (std::abs(zp + 2.0 * m.ell * b) > 0.5 * b)
      throw consistency_error("extract_modes: peak does not sit near a mode position");
    for (const auto& prev : out)
      if (prev.ell == m.ell)
        throw consistency_error("extract_modes: two peaks map to the same mode (overlap)");
    out.push_back(m);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& c) { return a.ell < c.ell; });
  double amax = 0.0;
  for (const auto& m : out) amax = std::max(amax, m.amplitude);
  for (auto& m : out) m.normalized = m.amplitude / amax;
  return out;
}

/// Classical velocity components: the magnetic force rotates the velocity
/// vector uniformly, v_z(t) = v_z0 cos t - v_phi0 sin t,
/// v_phi(t) = v_z0 sin t + v_phi0 cos t (omega = 1). Kinetic energy is
/// conserved while trading between linear and rotational form.
inline std::pair<double, double> classical_trajectory(double v_z0, double v_phi0, double t) {
  const double c = std::cos(t), s = std::sin(t);
  return {v_z0 * c - v_phi0 * s, v_z0 * s + v_phi0 * c};
}

}  // namespace cylq
