#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "cylq/errors.hpp"
#include "cylq/spinless.hpp"

namespace cylq {

/// Rendering parameters for a set of frames. max_abs is the largest |Psi|
/// over the whole frame set so that brightness is comparable across time.
struct FrameSpec {
  double max_abs = 1.0;
};

namespace detail {

/// Phase-to-hue map anchored at arg = 0, pi/2, pi, 3pi/2 ->
/// red, green, blue, purple: piecewise linear, 0..pi covers hue 0..240
/// and pi..2pi covers 240..360.
inline double phase_to_hue(double arg) {
  const double pi = std::numbers::pi;
  double a = std::fmod(arg, 2.0 * pi);
  if (a < 0.0) a += 2.0 * pi;
  if (a <= pi) return a / pi * 240.0;
  return 240.0 + (a - pi) / pi * 120.0;
}

inline void hsv_to_rgb(double hue, double value, unsigned char rgb[3]) {
  // saturation fixed at 1
  const double h = std::fmod(hue, 360.0) / 60.0;
  const int sector = static_cast<int>(h) % 6;
  const double f = h - std::floor(h);
  const double p = 0.0;
  const double q = value * (1.0 - f);
  const double t = value * f;
  double r = 0, g = 0, b = 0;
  switch (sector) {
    case 0: r = value; g = t; b = p; break;
    case 1: r = q; g = value; b = p; break;
    case 2: r = p; g = value; b = t; break;
    case 3: r = p; g = q; b = value; break;
    case 4: r = t; g = p; b = value; break;
    default: r = value; g = p; b = q; break;
  }
  rgb[0] = static_cast<unsigned char>(std::lround(255.0 * std::clamp(r, 0.0, 1.0)));
  rgb[1] = static_cast<unsigned char>(std::lround(255.0 * std::clamp(g, 0.0, 1.0)));
  rgb[2] = static_cast<unsigned char>(std::lround(255.0 * std::clamp(b, 0.0, 1.0)));
}

}  // namespace detail

/// Renders one component as a binary Netpbm (P6) image: hue encodes
/// arg Psi (1, i, -1, -i -> red, green, blue, purple), brightness encodes
/// |Psi| relative to spec.max_abs. phi runs left to right, z bottom to
/// top (top row is z_max). File size is header + 3 n_phi n_z bytes.
inline std::string render_frame(const ComplexField& field, const FrameSpec& spec, int comp = 0) {
  std::string out = "P6\n" + std::to_string(field.n_phi) + " " + std::to_string(field.n_z) + "\n255\n";
  out.reserve(out.size() + static_cast<std::size_t>(3) * field.n_phi * field.n_z);
  const double scale = spec.max_abs > 0.0 ? 1.0 / spec.max_abs : 0.0;
  for (int row = 0; row < field.n_z; ++row) {
    const int iz = field.n_z - 1 - row;
    for (int j = 0; j < field.n_phi; ++j) {
      const complexd v = field.at(comp, iz, j);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw consistency_error("render_frame: non-finite sample at (iz=" + std::to_string(iz) +
                                ", iphi=" + std::to_string(j) + ")");
      const double mag = std::abs(v);
      unsigned char rgb[3] = {0, 0, 0};
      if (mag > 0.0)
        detail::hsv_to_rgb(detail::phase_to_hue(std::arg(v)), std::clamp(mag * scale, 0.0, 1.0), rgb);
      out.push_back(static_cast<char>(rgb[0]));
      out.push_back(static_cast<char>(rgb[1]));
      out.push_back(static_cast<char>(rgb[2]));
    }
  }
  return out;
}

/// Largest |Psi| over a set of fields (frame-set normalization).
inline double max_abs_over(const std::vector<ComplexField>& frames) {
  double m = 0.0;
  for (const auto& f : frames)
    for (const auto& comp : f.components)
      for (const complexd& v : comp) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace cylq
