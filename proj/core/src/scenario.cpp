#include "iondecay/scenario.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "iondecay/carrier.hpp"
#include "iondecay/coupling.hpp"
#include "iondecay/csv.hpp"
#include "iondecay/errors.hpp"
#include "iondecay/heuristic.hpp"
#include "iondecay/hierarchy.hpp"
#include "iondecay/lindblad.hpp"
#include "iondecay/pulses.hpp"
#include "iondecay/svg.hpp"

namespace iondecay {

namespace {

std::vector<std::string> comment_lines(const Config& cfg) {
  std::vector<std::string> lines;
  std::istringstream in(cfg.serialize());
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::vector<double> time_grid(double t_max, double dt) {
  if (!(t_max > 0.0) || !(dt > 0.0)) {
    throw ConfigError("t_max_s and dt_s must be > 0");
  }
  const int n = static_cast<int>(std::floor(t_max / dt + 1e-9));
  std::vector<double> grid(n + 1);
  for (int i = 0; i <= n; ++i) grid[i] = i * dt;
  return grid;
}

void write_text_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  out << body;
  if (!out) throw IoError("write failed: " + path.string());
}

struct Emitter {
  std::filesystem::path dir;
  std::string stem;
  bool want_csv;
  bool want_svg;
  std::vector<std::filesystem::path> artifacts;

  std::filesystem::path emit(const std::string& suffix, const std::string& body) {
    const std::filesystem::path path = dir / (stem + suffix);
    write_text_file(path, body);
    artifacts.push_back(path);
    return path;
  }
};

Emitter make_emitter(const Config& resolved) {
  const std::string format = resolved.get_string("format");
  if (format != "csv" && format != "svg" && format != "both") {
    throw ConfigError("format must be csv, svg, or both");
  }
  const std::filesystem::path dir = resolved.get_string("out_dir");
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory: " + dir.string());
  return {dir, resolved.get_string("name"), format != "svg", format != "csv", {}};
}

std::string series_csv(const TimeSeries& series, const Config& resolved) {
  std::ostringstream out;
  write_timeseries_csv(out, series, comment_lines(resolved));
  return out.str();
}

// Two-column (t_s, value) CSV supplied by the user, overlaid on plots as-is.
PlotSeries overlay_from_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open overlay csv: " + path.string());
  PlotSeries points;
  points.label = "data";
  points.color = "#555555";
  points.dashed = true;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    const char* cursor = line.c_str();
    char* after_x = nullptr;
    const double x = std::strtod(cursor, &after_x);
    if (after_x == cursor) continue;  // header row
    while (*after_x == ',' || *after_x == ' ' || *after_x == '\t') ++after_x;
    char* after_y = nullptr;
    const double y = std::strtod(after_x, &after_y);
    if (after_y == after_x) continue;
    points.x.push_back(x * 1e6);  // plots run in microseconds
    points.y.push_back(y);
  }
  if (points.x.empty()) throw ConfigError("overlay csv has no data rows");
  return points;
}

void maybe_overlay(std::vector<PlotSeries>& curves, const Config& cfg) {
  if (cfg.has("overlay_csv")) {
    curves.push_back(overlay_from_csv(cfg.get_string("overlay_csv")));
  }
}

PlotSeries p_down_curve(const TimeSeries& series, std::string label,
                        std::string color, bool dashed = false) {
  PlotSeries s;
  s.label = std::move(label);
  s.color = std::move(color);
  s.dashed = dashed;
  s.x.reserve(series.size());
  for (double t : series.times) s.x.push_back(t * 1e6);  // show microseconds
  s.y = series.p_down;
  return s;
}

// --- mode runners -----------------------------------------------------------

ScenarioResult run_ajc(Config cfg) {
  const double eta_l = cfg.get_double("eta_l");
  const double omega_hz = cfg.get_double("omega_hz");
  const double g = eta_l * two_pi * omega_hz;
  const double gamma = cfg.get_double("gamma_over_g") * g;

  HierarchyParams params;
  params.g = g;
  params.gamma = gamma;
  params.nbar = cfg.get_double("nbar");
  params.n0 = cfg.get_int("n0");
  params.truncation = cfg.get_int("truncation", 4);
  params.validate();

  cfg.set("truncation", params.truncation);
  cfg.set("g_rad_s", g);       // derived: g = eta_l * 2 pi * omega_hz
  cfg.set("gamma_per_s", gamma);

  const bool overlay = cfg.has("heuristic_gamma0_per_s");
  HeuristicParams fit;
  if (overlay) {
    fit.gamma0 = cfg.get_double("heuristic_gamma0_per_s");
    fit.exponent = cfg.get_double("heuristic_exponent", 0.7);
    fit.rabi = cfg.get_double("heuristic_rabi_rad_s", g);
    fit.p_dist.assign(params.n0 + 1, 0.0);
    fit.p_dist[params.n0] = 1.0;
    cfg.set("heuristic_exponent", fit.exponent);
    cfg.set("heuristic_rabi_rad_s", fit.rabi);
  }

  const std::vector<double> grid =
      time_grid(cfg.get_double("t_max_s"), cfg.get_double("dt_s"));

  Emitter out = make_emitter(cfg);
  const HierarchyResult result = integrate_hierarchy(params, grid);

  if (out.want_csv) out.emit(".csv", series_csv(result.series, cfg));

  TimeSeries fit_series;
  if (overlay) {
    fit_series = heuristic_series(fit, grid);
    if (out.want_csv) out.emit("_heuristic.csv", series_csv(fit_series, cfg));
  }

  if (out.want_svg) {
    std::vector<PlotSeries> curves{p_down_curve(result.series, "model", "#1f6fb2")};
    if (overlay) {
      curves.push_back(p_down_curve(fit_series, "heuristic fit", "#c44e52", true));
    }
    maybe_overlay(curves, cfg);
    out.emit(".svg", svg_line_plot(curves, {"Blue-sideband Rabi decay, " + out.stem,
                                            "t (us)", "P_down"}));
  }
  return {cfg, out.artifacts};
}

ScenarioResult run_ajc_oracle(Config cfg) {
  const double eta_l = cfg.get_double("eta_l");
  const double omega_hz = cfg.get_double("omega_hz");
  const double g = eta_l * two_pi * omega_hz;

  OracleParams params;
  params.g = g;
  params.phi = cfg.get_double("phi", 0.0);
  params.gamma = cfg.get_double("gamma_over_g") * g;
  params.nbar = cfg.get_double("nbar");
  params.n_max = cfg.get_int("n_max", 12);
  params.mode = OracleMode::ajc_drive;

  const LindbladGenerator gen(params);
  cfg.set("g_rad_s", g);
  cfg.set("gamma_per_s", params.gamma);
  cfg.set("phi", params.phi);
  cfg.set("n_max", gen.n_max());  // echoes the tail-checked truncation

  const int n0 = cfg.get_int("n0");
  const DensityMatrix rho0 = DensityMatrix::pure(
      FockSpinVector::basis_state(gen.n_max(), n0, Spin::down));
  const std::vector<double> grid =
      time_grid(cfg.get_double("t_max_s"), cfg.get_double("dt_s"));

  Emitter out = make_emitter(cfg);
  const TimeSeries series = evolve(gen, rho0, grid);
  if (out.want_csv) out.emit(".csv", series_csv(series, cfg));
  if (out.want_svg) {
    std::vector<PlotSeries> curves{
        p_down_curve(series, "density-matrix model", "#2a7f3f")};
    maybe_overlay(curves, cfg);
    out.emit(".svg", svg_line_plot(curves, {"Blue-sideband Rabi decay (oracle), " +
                                                out.stem,
                                            "t (us)", "P_down"}));
  }
  return {cfg, out.artifacts};
}

ScenarioResult run_carrier(Config cfg) {
  CarrierParams params{cfg.get_double("gamma_per_s"), cfg.get_double("nu_rad_s"),
                       cfg.get_double("nbar")};
  params.validate();
  const complexd alpha(cfg.get_double("alpha_re", 0.0), cfg.get_double("alpha_im", 0.0));
  cfg.set("alpha_re", alpha.real());
  cfg.set("alpha_im", alpha.imag());

  const std::vector<double> grid =
      time_grid(cfg.get_double("t_max_s"), cfg.get_double("dt_s"));

  // The motional state evolves; the spectator qubit stays in |down>.
  TimeSeries series;
  for (double t : grid) series.append(t, -1.0, mean_excitation(params, alpha, t));

  Emitter out = make_emitter(cfg);
  if (out.want_csv) out.emit(".csv", series_csv(series, cfg));
  if (out.want_svg) {
    PlotSeries curve;
    curve.label = "mean excitation";
    curve.color = "#7b4fa6";
    for (std::size_t i = 0; i < series.size(); ++i) {
      curve.x.push_back(series.times[i] * 1e6);
      curve.y.push_back(series.mean_n[i]);
    }
    out.emit(".svg", svg_line_plot({curve}, {"Motional damping/heating, " + out.stem,
                                             "t (us)", "<n>"}));
  }
  return {cfg, out.artifacts};
}

ScenarioResult run_carrier_grid(Config cfg) {
  CarrierParams params{cfg.get_double("gamma_per_s"), cfg.get_double("nu_rad_s"),
                       cfg.get_double("nbar")};
  params.validate();
  const complexd alpha(cfg.get_double("alpha_re", 0.0), cfg.get_double("alpha_im", 0.0));
  const double t = cfg.get_double("t_s");
  const int n = cfg.get_int("grid_n", 201);
  const double half_span =
      cfg.get_double("half_span", std::abs(alpha) + 4.0 * std::sqrt(params.nbar + 1.0));

  cfg.set("alpha_re", alpha.real());
  cfg.set("alpha_im", alpha.imag());
  cfg.set("grid_n", n);
  cfg.set("half_span", half_span);

  const PGrid grid = pgrid(params, alpha, t, GridSpec::centered(half_span, n));

  Emitter out = make_emitter(cfg);
  if (out.want_csv) {
    std::ostringstream body;
    write_grid_csv(body, grid, comment_lines(cfg));
    out.emit(".csv", body.str());
  }
  if (out.want_svg) {
    out.emit(".svg", svg_heatmap(grid, {"Conditional P distribution, " + out.stem,
                                        "Re gamma", "Im gamma"}));
  }
  return {cfg, out.artifacts};
}

ScenarioResult run_heuristic(Config cfg) {
  HeuristicParams params;
  params.rabi = cfg.get_double("rabi_rad_s");
  params.gamma0 = cfg.get_double("gamma0_per_s");
  params.exponent = cfg.get_double("exponent", 0.7);
  cfg.set("exponent", params.exponent);

  std::istringstream dist(cfg.get_string("p_dist"));
  std::string token;
  while (std::getline(dist, token, ',')) params.p_dist.push_back(std::stod(token));
  params.validate();

  const std::vector<double> grid =
      time_grid(cfg.get_double("t_max_s"), cfg.get_double("dt_s"));
  const TimeSeries series = heuristic_series(params, grid);

  Emitter out = make_emitter(cfg);
  if (out.want_csv) out.emit(".csv", series_csv(series, cfg));
  if (out.want_svg) {
    std::vector<PlotSeries> curves{p_down_curve(series, "heuristic fit", "#c44e52")};
    maybe_overlay(curves, cfg);
    out.emit(".svg", svg_line_plot(curves, {"Heuristic damped Rabi fit, " + out.stem,
                                            "t (us)", "P_down"}));
  }
  return {cfg, out.artifacts};
}

GasIonSystem system_from_config(const Config& cfg) {
  GasIonSystem sys;
  sys.chi = cfg.get_double("chi_m3", 1.0);
  sys.q = cfg.get_double("charge_c", 1.0);
  sys.rho_number = cfg.get_double("rho_number_m3", 1.0);
  sys.rho_mass = cfg.get_double("rho_mass_kg_m2", 1.0);
  sys.reduced_mass = cfg.get_double("reduced_mass_kg", 1.0);
  sys.rel_velocity = cfg.get_double("rel_velocity_m_s", 1.0);
  sys.ion_mass = cfg.get_double("ion_mass_kg", 1.0);
  sys.trap_freq = cfg.get_double("trap_freq_rad_s", 1.0);
  sys.z = cfg.get_double("z_m", 1.0);
  sys.surface = cfg.get_double("surface_m2", 1.0);
  sys.validate();
  return sys;
}

ScenarioResult run_coupling_sweep(Config cfg) {
  // Required inputs for V_k; the remaining system fields default to 1.
  for (const char* key : {"chi_m3", "charge_c", "rho_number_m3", "rho_mass_kg_m2",
                          "z_m", "surface_m2", "disp_amplitude"}) {
    (void)cfg.get_double(key);
  }
  const GasIonSystem sys = system_from_config(cfg);
  const DispersionLaw disp{cfg.get_double("disp_amplitude"),
                           cfg.get_double("disp_exponent", 1.5)};
  cfg.set("disp_exponent", disp.exponent);

  const double k_min = cfg.get_double("k_min");
  const double k_max = cfg.get_double("k_max");
  const int n_k = cfg.get_int("n_k", 200);
  const bool log_spacing = cfg.get_int("k_log", 1) != 0;
  if (!(k_min > 0.0) || !(k_max > k_min) || n_k < 2) {
    throw ConfigError("coupling_sweep: need 0 < k_min < k_max and n_k >= 2");
  }
  cfg.set("n_k", n_k);
  cfg.set("k_log", log_spacing ? 1 : 0);

  std::vector<double> ks(n_k), vks(n_k);
  for (int i = 0; i < n_k; ++i) {
    const double f = static_cast<double>(i) / (n_k - 1);
    ks[i] = log_spacing ? k_min * std::pow(k_max / k_min, f)
                        : k_min + f * (k_max - k_min);
    vks[i] = coupling_vk(ks[i], sys, disp);
  }

  Emitter out = make_emitter(cfg);
  if (out.want_csv) {
    std::ostringstream body;
    write_xy_csv(body, "k,vk", ks, vks, comment_lines(cfg));
    out.emit(".csv", body.str());
  }
  if (out.want_svg) {
    PlotSeries curve{"V_k", ks, vks, "#1f6fb2", false};
    out.emit(".svg", svg_line_plot({curve}, {"Surface-mode coupling sweep, " + out.stem,
                                             "k (1/m)", "V_k (rad/s)"}));
  }
  return {cfg, out.artifacts};
}

ScenarioResult run_langevin(Config cfg) {
  for (const char* key :
       {"chi_m3", "charge_c", "rho_number_m3", "reduced_mass_kg", "rel_velocity_m_s"}) {
    (void)cfg.get_double(key);
  }
  const GasIonSystem sys = system_from_config(cfg);
  const LangevinRates rates = langevin_rates(sys);

  std::ostringstream body;
  for (const std::string& line : comment_lines(cfg)) body << "# " << line << '\n';
  body << "impact_param_m = " << format_g9(rates.impact_param) << '\n'
       << "rate_const_m3_s = " << format_g9(rates.rate_const) << '\n'
       << "reaction_rate_per_s = " << format_g9(rates.reaction_rate) << '\n';

  Emitter out = make_emitter(cfg);
  out.emit(".txt", body.str());
  return {cfg, out.artifacts};
}

ScenarioResult run_pulse_demo(Config cfg) {
  const std::string pulse = cfg.get_string("pulse");
  const int n_max = cfg.get_int("n_max", 12);
  const int n0 = cfg.get_int("n0", 0);
  const Spin spin = cfg.get_string("spin", "down") == "up" ? Spin::up : Spin::down;
  const PulseParams params(cfg.get_double("area"), cfg.get_double("phi", 0.0));
  cfg.set("n_max", n_max);
  cfg.set("n0", n0);
  cfg.set("spin", spin == Spin::up ? "up" : "down");
  cfg.set("phi", params.phase);

  FockSpinVector psi = FockSpinVector::basis_state(n_max, n0, spin);
  if (pulse == "carrier") {
    psi = apply_carrier(psi, params);
  } else if (pulse == "jc") {
    psi = apply_jc(psi, params);
  } else if (pulse == "ajc") {
    psi = apply_ajc(psi, params);
  } else {
    throw ConfigError("pulse must be carrier, jc, or ajc");
  }

  std::ostringstream body;
  for (const std::string& line : comment_lines(cfg)) body << "# " << line << '\n';
  body << "p_down = " << format_g9(p_down(psi)) << '\n'
       << "sigma_z = " << format_g9(expect_sigma_z(psi)) << '\n'
       << "mean_n = " << format_g9(expect_number(psi)) << '\n';
  for (int n = 0; n <= n_max; ++n) {
    for (Spin s : {Spin::down, Spin::up}) {
      const complexd amp = psi.amplitude(n, s);
      if (std::abs(amp) > 1e-12) {
        body << "amp_" << n << (s == Spin::up ? "_up" : "_down") << " = "
             << format_g9(amp.real()) << ' ' << format_g9(amp.imag()) << '\n';
      }
    }
  }

  Emitter out = make_emitter(cfg);
  out.emit(".txt", body.str());
  return {cfg, out.artifacts};
}

}  // namespace

ScenarioResult run_scenario(const Config& cfg) {
  Config resolved = cfg;
  const std::string mode = resolved.get_string("mode");
  resolved.set("out_dir", resolved.get_string("out_dir", "."));
  resolved.set("name", resolved.get_string("name", mode));
  resolved.set("format", resolved.get_string("format", "both"));

  if (mode == "ajc") return run_ajc(std::move(resolved));
  if (mode == "ajc_oracle") return run_ajc_oracle(std::move(resolved));
  if (mode == "carrier") return run_carrier(std::move(resolved));
  if (mode == "carrier_grid") return run_carrier_grid(std::move(resolved));
  if (mode == "heuristic") return run_heuristic(std::move(resolved));
  if (mode == "coupling_sweep") return run_coupling_sweep(std::move(resolved));
  if (mode == "langevin") return run_langevin(std::move(resolved));
  if (mode == "pulse_demo") return run_pulse_demo(std::move(resolved));
  throw ConfigError("unknown mode: " + mode);
}

std::vector<std::string> preset_names() { return {"fig2", "fig3", "fig4a", "fig4b"}; }

std::vector<Config> expand_preset(const std::string& name,
                                  const std::filesystem::path& out_dir) {
  auto base_ajc = [&](const std::string& stem, int n0) {
    Config cfg;
    cfg.set("mode", "ajc");
    cfg.set("name", stem);
    cfg.set("out_dir", out_dir.string());
    cfg.set("eta_l", 0.202);
    cfg.set("omega_hz", 475e3);
    cfg.set("gamma_over_g", 6.0e-3);
    cfg.set("nbar", 1.0);
    cfg.set("n0", n0);
    cfg.set("truncation", 4);
    cfg.set("t_max_s", 120e-6);
    cfg.set("dt_s", 1e-7);
    return cfg;
  };
  auto grid_snapshot = [&](const std::string& stem, double gamma_t) {
    Config cfg;
    cfg.set("mode", "carrier_grid");
    cfg.set("name", stem);
    cfg.set("out_dir", out_dir.string());
    cfg.set("gamma_per_s", 1.0);
    cfg.set("nu_rad_s", 10.0);  // a few turns of the phase-space spiral
    cfg.set("nbar", 1.0);
    cfg.set("alpha_re", 2.0);
    cfg.set("alpha_im", 0.0);
    cfg.set("t_s", gamma_t);
    cfg.set("grid_n", 201);
    return cfg;
  };

  if (name == "fig2") {
    return {grid_snapshot("fig2_gt02", 0.2), grid_snapshot("fig2_gt09", 0.9)};
  }
  if (name == "fig3") {
    return {base_ajc("fig3", 0)};
  }
  if (name == "fig4a" || name == "fig4b") {
    Config cfg = base_ajc(name, name == "fig4a" ? 0 : 1);
    cfg.set("heuristic_gamma0_per_s", 11.9e3);
    return {cfg};
  }
  throw ConfigError("unknown preset: " + name);
}

}  // namespace iondecay
