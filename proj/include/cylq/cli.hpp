#pragma once

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cylq/closed_forms.hpp"
#include "cylq/config.hpp"
#include "cylq/csv.hpp"
#include "cylq/errors.hpp"
#include "cylq/oracle.hpp"
#include "cylq/perturbation.hpp"
#include "cylq/render.hpp"
#include "cylq/spin.hpp"
#include "cylq/spinless.hpp"
#include "cylq/version.hpp"

namespace cylq {
namespace cli {

/// Resolved run state: validated config, output directory, and the list
/// of files written so far (for the manifest).
struct RunContext {
  PhysicsConfig cfg;
  std::set<std::string> explicit_keys;
  std::filesystem::path out_dir;
  std::vector<std::pair<std::string, std::uint64_t>> written;

  void write(const std::string& name, const std::string& bytes) {
    const auto path = out_dir / name;
    write_file(path.string(), bytes);
    written.emplace_back(name, fnv1a64(bytes));
  }

  void write_manifest(const std::string& command) {
    std::ostringstream m;
    m << "cylq " << kVersion << "\n";
    m << "command = " << command << "\n";
    m << "b = " << format_double(cfg.b) << "\n";
    m << "epsilon = " << format_double(cfg.epsilon) << "\n";
    m << "ell = " << cfg.ell << "\n";
    m << "series_degree = " << cfg.series_degree << "\n";
    m << "series_order = " << cfg.series_order << "\n";
    m << "quad_nodes = " << cfg.quad_nodes << "\n";
    m << "fock_dim = " << cfg.fock_dim << "\n";
    m << "z_min = " << format_double(cfg.z_min) << "\n";
    m << "z_max = " << format_double(cfg.z_max) << "\n";
    m << "n_phi = " << cfg.n_phi << "\n";
    m << "n_z = " << cfg.n_z << "\n";
    m << "note = single-mode evolution frames drop a physically irrelevant global phase\n";
    for (const auto& [name, sum] : written) {
      char buf[24];
      std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(sum));
      m << "file " << name << " fnv1a64 " << buf << "\n";
    }
    write_file((out_dir / "manifest.txt").string(), m.str());
  }
};

namespace detail {

inline AngularProfile parse_profile(const std::string& text) {
  AngularProfile p;
  if (text == "cos") {
    p.set(1, 0.5);
    p.set(-1, 0.5);
    return p;
  }
  if (text == "const") {
    p.set(0, 1.0);
    return p;
  }
  // comma-separated "ell=amplitude" pairs with real amplitudes
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw validation_error("profile entries must be 'ell=amplitude': " + item);
    int ell;
    double amp;
    try {
      ell = std::stoi(item.substr(0, eq));
      amp = std::stod(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw validation_error("cannot parse profile entry: " + item);
    }
    p.set(ell, amp);
  }
  if (p.modes.empty()) throw validation_error("profile has no modes");
  return p;
}

inline std::string frame_name(const std::string& stem, int index) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%03d", index);
  return stem + "_" + buf + ".ppm";
}

inline std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = lo + i * (hi - lo) / (n - 1);
  return out;
}

}  // namespace detail

inline int cmd_spectrum(RunContext& ctx) {
  std::vector<std::vector<double>> rows;
  for (int n = 0; n < ctx.cfg.fock_dim; ++n)
    rows.push_back({static_cast<double>(n), energy(n, ctx.cfg.ell)});
  ctx.write("spectrum.csv",
            csv_to_string({"uncoupled spectrum E = n + 1/2; every angular mode ell carries the "
                           "same ladder (infinite degeneracy)"},
                          {"n", "energy"}, rows));
  ctx.write_manifest("spectrum");
  return 0;
}

inline int cmd_evolve(RunContext& ctx, int frames, double t_max) {
  const PhysicsConfig& cfg = ctx.cfg;
  double z_lo = cfg.z_min, z_hi = cfg.z_max;
  if (!ctx.explicit_keys.count("z_min") && !ctx.explicit_keys.count("z_max")) {
    AngularProfile single;
    single.set(cfg.ell, 1.0);
    std::tie(z_lo, z_hi) = protocol_z_range(single, cfg.b);
  }
  std::vector<ComplexField> fields;
  std::vector<std::vector<double>> norm_rows;
  for (int fidx = 0; fidx < frames; ++fidx) {
    const double t = frames > 1 ? fidx * t_max / (frames - 1) : 0.0;
    ComplexField f = ComplexField::make(1, cfg.n_phi, cfg.n_z, z_lo, z_hi);
    for (int i = 0; i < cfg.n_z; ++i) {
      const complexd base = coherent_evolution(cfg.ell, cfg.b, t, 0.0, f.z(i));
      for (int j = 0; j < cfg.n_phi; ++j)
        f.at(0, i, j) = base * std::exp(complexd(0.0, cfg.ell * f.phi(j)));
    }
    norm_rows.push_back({t, f.discrete_norm()});
    fields.push_back(std::move(f));
  }
  const FrameSpec spec{max_abs_over(fields)};
  for (int fidx = 0; fidx < frames; ++fidx)
    ctx.write(detail::frame_name("evolve", fidx), render_frame(fields[fidx], spec));
  ctx.write("evolve_norms.csv",
            csv_to_string({"discrete norm per frame (conserved)"}, {"t", "norm"}, norm_rows));
  ctx.write_manifest("evolve");
  return 0;
}

inline int cmd_fourier(RunContext& ctx, int frames, double t_max, const std::string& profile_text) {
  const PhysicsConfig& cfg = ctx.cfg;
  const AngularProfile profile = detail::parse_profile(profile_text);
  if (!separation_ok(cfg.b))
    std::cerr << "warning: b < 4 widths, half-period peaks will overlap\n";
  double z_lo = cfg.z_min, z_hi = cfg.z_max;
  if (!ctx.explicit_keys.count("z_min") && !ctx.explicit_keys.count("z_max"))
    std::tie(z_lo, z_hi) = protocol_z_range(profile, cfg.b);

  std::vector<ComplexField> fields;
  for (int fidx = 0; fidx < frames; ++fidx) {
    const double t = frames > 1 ? fidx * t_max / (frames - 1) : 0.0;
    fields.push_back(
        fourier_transform_protocol(profile, cfg.b, t, cfg.n_phi, cfg.n_z, z_lo, z_hi));
  }
  const FrameSpec spec{max_abs_over(fields)};
  for (int fidx = 0; fidx < frames; ++fidx)
    ctx.write(detail::frame_name("fourier", fidx), render_frame(fields[fidx], spec));

  // mode readout is always taken at the half period
  const ComplexField half = fourier_transform_protocol(profile, cfg.b, std::numbers::pi,
                                                       cfg.n_phi, cfg.n_z, z_lo, z_hi);
  const std::vector<ModeAmplitude> modes = extract_modes(half, cfg.b);
  std::vector<std::vector<double>> rows;
  for (const auto& m : modes)
    rows.push_back({static_cast<double>(m.ell), m.z_peak, m.amplitude, m.normalized});
  ctx.write("fourier_modes.csv",
            csv_to_string({"half-period peak amplitudes per angular mode, read at phi = 0",
                           "amplitudes are proportional to the profile's Fourier coefficients"},
                          {"ell", "z_peak", "amplitude", "normalized"}, rows));
  ctx.write_manifest("fourier");
  return 0;
}

inline int cmd_perturb(RunContext& ctx) {
  const PhysicsConfig& cfg = ctx.cfg;
  const PerturbationSolution sol = solve_perturbation(0, cfg.series_order, Branch::symmetric, cfg);
  auto [es, ea] = eigen_energies(sol, cfg.epsilon);

  std::vector<std::vector<double>> erows;
  for (int k = 0; k <= sol.order; ++k)
    erows.push_back({static_cast<double>(k), sol.energies[k]});
  ctx.write("perturb_energies.csv",
            csv_to_string({"energy coefficients E^(k) for the ground level",
                           "E_symmetric(epsilon) = " + format_double(es),
                           "E_antisymmetric(epsilon) = " + format_double(ea)},
                          {"k", "energy_coefficient"}, erows));

  const std::vector<double> zs = detail::linspace(cfg.z_min, cfg.z_max, cfg.n_z);
  std::vector<std::string> cols = {"z"};
  for (int k = 0; k <= sol.order; ++k) cols.push_back("order" + std::to_string(k));
  std::vector<std::vector<double>> rows(zs.size());
  for (std::size_t i = 0; i < zs.size(); ++i) rows[i].push_back(zs[i]);
  for (int k = 0; k <= sol.order; ++k) {
    PerturbationSolution one = sol;
    one.order = k;
    one.energies.assign(sol.energies.begin(), sol.energies.begin() + k + 1);
    one.series.assign(sol.series.begin(), sol.series.begin() + k + 1);
    for (std::size_t i = 0; i < zs.size(); ++i) {
      // isolate order k: difference of partial sums at eps = 1
      double val = evaluate_zplus(one, 1.0, zs[i]);
      if (k > 0) {
        PerturbationSolution prev = sol;
        prev.order = k - 1;
        prev.energies.assign(sol.energies.begin(), sol.energies.begin() + k);
        prev.series.assign(sol.series.begin(), sol.series.begin() + k);
        val -= evaluate_zplus(prev, 1.0, zs[i]);
      }
      rows[i].push_back(val);
    }
  }
  ctx.write("perturb_profiles.csv",
            csv_to_string({"per-order axial corrections Z^(k)(z), unnormalized"}, cols, rows));

  SpinorProfile prof = synthesize_wavefunction(sol, cfg.epsilon, cfg.z_min, cfg.z_max, cfg.n_z);
  std::string ratio_note = "order contribution norms:";
  for (double t : prof.term_norms) ratio_note += " " + format_double(t);
  ctx.write("perturb_convergence.csv",
            csv_to_string({"per-order contribution size |eps|^k ||f_k||; decreasing steps mean "
                           "the expansion is converging",
                           ratio_note},
                          {"k", "term_norm"},
                          [&] {
                            std::vector<std::vector<double>> r;
                            for (std::size_t k = 0; k < prof.term_norms.size(); ++k)
                              r.push_back({static_cast<double>(k), prof.term_norms[k]});
                            return r;
                          }()));
  ctx.write_manifest("perturb");
  return 0;
}

inline int cmd_oracle(RunContext& ctx) {
  const PhysicsConfig& cfg = ctx.cfg;
  const auto coupled = oracle::build_coupled_matrix(cfg);
  const EigenDecomposition spec = oracle::exact_spectrum(coupled);
  std::vector<std::vector<double>> rows;
  const int count = std::min(12, 2 * cfg.fock_dim);
  for (int i = 0; i < count; ++i)
    rows.push_back({static_cast<double>(i), spec.values[i],
                    oracle::branch_signature(spec.vectors[i], cfg.fock_dim)});
  ctx.write("oracle_eigenvalues.csv",
            csv_to_string({"lowest eigenvalues of the coupled number-basis matrix",
                           "branch_signature: +1 symmetric, -1 antisymmetric"},
                          {"index", "eigenvalue", "branch_signature"}, rows));

  // residuals of the truncated energy series against exact diagonalization
  const PerturbationSolution sol = solve_perturbation(0, cfg.series_order, Branch::symmetric, cfg);
  const std::vector<double> eps_list = {0.02, 0.05, 0.1};
  std::vector<double> series_low, oracle_low;
  std::vector<std::vector<double>> rrows;
  for (double eps : eps_list) {
    PhysicsConfig c = cfg;
    c.epsilon = eps;
    const auto h = oracle::build_coupled_matrix(c);
    const auto d = oracle::exact_spectrum(h);
    const bool first_sym = oracle::branch_signature(d.vectors[0], cfg.fock_dim) > 0.0;
    const double e_sym = first_sym ? d.values[0] : d.values[1];
    const double e_anti = first_sym ? d.values[1] : d.values[0];
    auto [es, ea] = eigen_energies(sol, eps);
    series_low.push_back(std::min(es, ea));
    oracle_low.push_back(d.values[0]);
    rrows.push_back({eps, es, e_sym, std::abs(es - e_sym), ea, e_anti, std::abs(ea - e_anti)});
  }
  const auto fit = oracle::richardson_order_check(series_low, oracle_low, eps_list);
  ctx.write("oracle_residuals.csv",
            csv_to_string({"truncated series vs exact diagonalization, per branch",
                           "lowest-eigenvalue residual slope = " + format_double(fit.slope) +
                               " (expected about series_order + 1)"},
                          {"epsilon", "E_series_sym", "E_oracle_sym", "residual_sym",
                           "E_series_anti", "E_oracle_anti", "residual_anti"},
                          rrows));
  ctx.write_manifest("oracle");
  return 0;
}

inline int cmd_spin(RunContext& ctx) {
  const PhysicsConfig& cfg = ctx.cfg;
  for (const Branch br : {Branch::symmetric, Branch::antisymmetric}) {
    const PerturbationSolution sol = solve_perturbation(0, cfg.series_order, br, cfg);
    const SpinorProfile prof =
        synthesize_wavefunction(sol, cfg.epsilon, cfg.z_min, cfg.z_max, cfg.n_z, cfg.ell);
    const SpinField sf = spin_field(prof, 0.0);
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < prof.z.size(); ++i)
      rows.push_back({prof.z[i], prof.zplus[i], prof.zminus[i], sf.rho[i], sf.alpha[i]});
    ctx.write("spin_" + branch_name(br) + ".csv",
              csv_to_string({branch_name(br) + " branch profile at phi = 0",
                             "energy = " + format_double(prof.energy)},
                            {"z", "Zplus", "Zminus", "rho", "alpha"}, rows));
  }
  ctx.write_manifest("spin");
  return 0;
}

inline int cmd_rabi(RunContext& ctx, int samples, std::optional<double> t_max_opt) {
  const PhysicsConfig& cfg = ctx.cfg;
  const PerturbationSolution sol = solve_perturbation(0, cfg.series_order, Branch::symmetric, cfg);
  const TwoStateSystem sys = make_two_state(sol, cfg.epsilon);
  if (sys.Omega == 0.0) throw consistency_error("rabi frequency vanished (epsilon = 0?)");
  const double t_max = t_max_opt.value_or(2.0 * std::numbers::pi / std::abs(sys.Omega));
  std::vector<std::vector<double>> rows;
  for (int i = 0; i < samples; ++i) {
    const double t = samples > 1 ? i * t_max / (samples - 1) : 0.0;
    auto [up, down] = rabi_evolution(sys, t);
    rows.push_back({t, std::norm(up), std::norm(down)});
  }
  ctx.write("rabi.csv",
            csv_to_string({"two-state beating between the wells; starts spin-down at z = -b",
                           "Omega = " + format_double(sys.Omega) +
                               " (half the symmetric/antisymmetric splitting)"},
                          {"t", "P_up", "P_down"}, rows));
  ctx.write_manifest("rabi");
  return 0;
}

/// Runs the CLI. Arguments are what main() received after the program
/// name. Returns the process exit code: 0 success, 1 validation error,
/// 2 convergence/cross-check failure.
inline int run(const std::vector<std::string>& args) {
  CLI::App app{"quantum dynamics of a charged particle on a cylinder in a radial magnetic field"};
  app.set_version_flag("--version", std::string("cylq ") + kVersion);
  app.require_subcommand(1);

  std::string config_path, out_dir_flag, grid_text, profile_text = "cos";
  double b_flag = 0.0, eps_flag = 0.0, t_max = -1.0;
  int ell_flag = 0, order_flag = -1, frames = 9;
  bool has_b = false, has_eps = false, has_ell = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "key = value config file");
    sub->add_option("--b", b_flag, "oscillator spacing b")->each([&](const std::string&) { has_b = true; });
    sub->add_option("--epsilon", eps_flag, "spin coupling epsilon")
        ->each([&](const std::string&) { has_eps = true; });
    sub->add_option("--ell", ell_flag, "angular mode")->each([&](const std::string&) { has_ell = true; });
    sub->add_option("--order", order_flag, "perturbation order K");
    sub->add_option("--grid", grid_text, "grid as NPHIxNZ, e.g. 256x512");
    sub->add_option("--out", out_dir_flag, "output directory (default $CYLQ_OUT_DIR or .)");
  };

  CLI::App* c_spectrum = app.add_subcommand("spectrum", "energy ladder table");
  CLI::App* c_evolve = app.add_subcommand("evolve", "single-mode coherent evolution frames");
  CLI::App* c_fourier = app.add_subcommand("fourier", "angular-profile transform demo frames");
  CLI::App* c_perturb = app.add_subcommand("perturb", "perturbative energies and profiles");
  CLI::App* c_oracle = app.add_subcommand("oracle", "exact diagonalization cross-check");
  CLI::App* c_spin = app.add_subcommand("spin", "spinor profiles and spin field");
  CLI::App* c_rabi = app.add_subcommand("rabi", "two-state beating probabilities");
  for (CLI::App* sub : {c_spectrum, c_evolve, c_fourier, c_perturb, c_oracle, c_spin, c_rabi})
    add_common(sub);
  for (CLI::App* sub : {c_evolve, c_fourier, c_rabi})
    sub->add_option("--frames", frames, "number of frames or samples");
  for (CLI::App* sub : {c_evolve, c_fourier, c_rabi})
    sub->add_option("--t-max", t_max, "final time");
  c_fourier->add_option("--profile", profile_text,
                        "angular profile: 'cos', 'const', or 'ell=amp,...'");

  std::vector<char*> argv;
  std::vector<std::string> storage;
  storage.push_back("cylq");
  for (const auto& a : args) storage.push_back(a);
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    RunContext ctx;
    if (!config_path.empty()) {
      LoadedConfig loaded = load_config_file(config_path);
      ctx.cfg = loaded.config;
      ctx.explicit_keys = loaded.keys_seen;
    }
    if (has_b) ctx.cfg.b = b_flag;
    if (has_eps) ctx.cfg.epsilon = eps_flag;
    if (has_ell) ctx.cfg.ell = ell_flag;
    if (order_flag >= 0) ctx.cfg.series_order = order_flag;
    if (!grid_text.empty()) {
      const auto x = grid_text.find('x');
      if (x == std::string::npos) throw validation_error("--grid must look like 256x512");
      try {
        ctx.cfg.n_phi = std::stoi(grid_text.substr(0, x));
        ctx.cfg.n_z = std::stoi(grid_text.substr(x + 1));
      } catch (const std::exception&) {
        throw validation_error("--grid must look like 256x512");
      }
    }
    ctx.cfg = validate(ctx.cfg);

    std::string out_dir = out_dir_flag;
    if (out_dir.empty()) {
      const char* env = std::getenv("CYLQ_OUT_DIR");
      out_dir = env ? env : ".";
    }
    ctx.out_dir = out_dir;
    std::filesystem::create_directories(ctx.out_dir);

    if (*c_spectrum) return cmd_spectrum(ctx);
    if (*c_evolve) return cmd_evolve(ctx, frames, t_max > 0 ? t_max : 2.0 * std::numbers::pi);
    if (*c_fourier)
      return cmd_fourier(ctx, frames, t_max > 0 ? t_max : std::numbers::pi, profile_text);
    if (*c_perturb) return cmd_perturb(ctx);
    if (*c_oracle) return cmd_oracle(ctx);
    if (*c_spin) return cmd_spin(ctx);
    if (*c_rabi)
      return cmd_rabi(ctx, frames,
                      t_max > 0 ? std::optional<double>(t_max) : std::nullopt);
    return 1;
  } catch (const validation_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 1;
  } catch (const consistency_error& e) {
    std::cerr << "consistency error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace cli
}  // namespace cylq
