#pragma once

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "cylq/errors.hpp"

namespace cylq {

/// Run parameters in natural units (hbar = m = omega = 1).
///
/// b is the dimensionless spacing between neighboring oscillator centers,
/// epsilon the spin-field coupling strength. The remaining fields control
/// truncations and output grids. Immutable after validation; safe to share
/// across workers.
struct PhysicsConfig {
  double b = 2.0;        ///< oscillator center spacing, > 0
  double epsilon = 0.5;  ///< spin coupling strength
  int ell = 0;           ///< angular mode number
  int series_degree = 64;  ///< truncation degree D of power series
  int series_order = 2;    ///< perturbation order K
  int quad_nodes = 64;     ///< Gauss-Legendre nodes on [0,1]
  int fock_dim = 60;       ///< number-basis truncation N per spin block
  double z_min = -12.0;
  double z_max = 6.0;
  int n_phi = 256;  ///< grid columns around the cylinder
  int n_z = 512;    ///< grid rows along the axis
};

/// Checks every invariant and returns the config unchanged.
/// Throws validation_error naming the first violated invariant.
/// Idempotent: validate(validate(c)) == validate(c).
inline PhysicsConfig validate(const PhysicsConfig& cfg) {
  if (!(cfg.b > 0.0)) throw validation_error("b must be positive");
  if (cfg.series_degree < 1) throw validation_error("series_degree must be at least 1");
  if (cfg.series_order < 0) throw validation_error("series_order must be non-negative");
  if (cfg.quad_nodes < 2) throw validation_error("quad_nodes must be at least 2");
  if (cfg.fock_dim < cfg.series_order + 2) throw validation_error("fock_dim too small");
  if (cfg.n_phi < 2) throw validation_error("n_phi must be at least 2");
  if (cfg.n_z < 2) throw validation_error("n_z must be at least 2");
  if (!std::isfinite(cfg.z_min) || !std::isfinite(cfg.z_max) || !(cfg.z_min < cfg.z_max))
    throw validation_error("z_range must be finite and nonempty");
  return cfg;
}

namespace detail {

inline std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

inline double parse_double(const std::string& key, const std::string& v) {
  std::size_t pos = 0;
  double out;
  try {
    out = std::stod(v, &pos);
  } catch (const std::exception&) {
    throw validation_error("config value for '" + key + "' is not a number: " + v);
  }
  if (pos != v.size()) throw validation_error("config value for '" + key + "' is not a number: " + v);
  return out;
}

inline int parse_int(const std::string& key, const std::string& v) {
  std::size_t pos = 0;
  long out;
  try {
    out = std::stol(v, &pos);
  } catch (const std::exception&) {
    throw validation_error("config value for '" + key + "' is not an integer: " + v);
  }
  if (pos != v.size()) throw validation_error("config value for '" + key + "' is not an integer: " + v);
  return static_cast<int>(out);
}

}  // namespace detail

/// Parsed config plus the set of keys that were explicitly present,
/// so callers can distinguish defaults from user choices.
struct LoadedConfig {
  PhysicsConfig config;
  std::set<std::string> keys_seen;
};

/// Reads a flat `key = value` file. '#' starts a comment, blank lines are
/// skipped, every key has a default, unknown keys are an error.
/// Does not validate (callers run validate() after applying overrides).
inline LoadedConfig load_config_stream(std::istream& in) {
  LoadedConfig out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw validation_error("config line " + std::to_string(lineno) + " is not 'key = value'");
    const std::string key = detail::trim(line.substr(0, eq));
    const std::string val = detail::trim(line.substr(eq + 1));
    PhysicsConfig& c = out.config;
    if (key == "b") c.b = detail::parse_double(key, val);
    else if (key == "epsilon") c.epsilon = detail::parse_double(key, val);
    else if (key == "ell") c.ell = detail::parse_int(key, val);
    else if (key == "series_degree") c.series_degree = detail::parse_int(key, val);
    else if (key == "series_order") c.series_order = detail::parse_int(key, val);
    else if (key == "quad_nodes") c.quad_nodes = detail::parse_int(key, val);
    else if (key == "fock_dim") c.fock_dim = detail::parse_int(key, val);
    else if (key == "z_min") c.z_min = detail::parse_double(key, val);
    else if (key == "z_max") c.z_max = detail::parse_double(key, val);
    else if (key == "n_phi") c.n_phi = detail::parse_int(key, val);
    else if (key == "n_z") c.n_z = detail::parse_int(key, val);
    else throw validation_error("unknown config key: " + key);
    out.keys_seen.insert(key);
  }
  return out;
}

inline LoadedConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open config file: " + path);
  return load_config_stream(in);
}

}  // namespace cylq
