// iondecay — scenario runner for trapped-ion background-gas damping models

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <vector>

#include "iondecay/bessel.hpp"
#include "iondecay/config.hpp"
#include "iondecay/csv.hpp"
#include "iondecay/errors.hpp"
#include "iondecay/scenario.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_config = 2;
constexpr int exit_numeric = 3;
constexpr int exit_io = 4;

void print_artifacts(const iondecay::ScenarioResult& result) {
  for (const auto& path : result.artifacts) std::cout << path.string() << '\n';
}

int run_command(const std::string& config_path, const std::string& forced_mode) {
  iondecay::Config cfg = iondecay::Config::parse_file(config_path);
  if (!forced_mode.empty()) cfg.set("mode", forced_mode);
  const iondecay::ScenarioResult result = iondecay::run_scenario(cfg);
  print_artifacts(result);

  // Small text reports are echoed so the values land on stdout too.
  for (const auto& path : result.artifacts) {
    if (path.extension() == ".txt") {
      std::ifstream in(path);
      std::cout << in.rdbuf();
    }
  }
  return exit_ok;
}

int preset_command(const std::vector<std::string>& names, const std::string& out_dir) {
  std::vector<iondecay::Config> configs;
  for (const std::string& name : names) {
    for (iondecay::Config& cfg : iondecay::expand_preset(name, out_dir)) {
      configs.push_back(std::move(cfg));
    }
  }
  if (configs.size() == 1) {
    print_artifacts(iondecay::run_scenario(configs.front()));
    return exit_ok;
  }
  // Scenarios share nothing; run the batch concurrently.
  std::vector<std::future<iondecay::ScenarioResult>> jobs;
  jobs.reserve(configs.size());
  for (const iondecay::Config& cfg : configs) {
    jobs.push_back(std::async(std::launch::async,
                              [cfg]() { return iondecay::run_scenario(cfg); }));
  }
  for (auto& job : jobs) print_artifacts(job.get());
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"trapped-ion decoherence curves from background-gas polarization"};
  app.require_subcommand(1);

  std::string config_path;
  auto* run = app.add_subcommand("run", "run a scenario from a config file");
  run->add_option("config", config_path, "flat key = value config file")->required();

  std::vector<std::string> preset_list;
  std::string out_dir = ".";
  auto* preset = app.add_subcommand("preset", "run one or more named presets");
  preset->add_option("names", preset_list, "fig2, fig3, fig4a, fig4b")->required();
  preset->add_option("--out", out_dir, "output directory (default .)");

  double k1_x = 0.0;
  double k1_min = 0.0, k1_max = 0.0;
  int k1_n = 200;
  std::string k1_out;
  auto* k1 = app.add_subcommand("k1", "evaluate the modified Bessel function K1");
  auto* k1_point = k1->add_option("--x", k1_x, "argument, x > 0");
  k1->add_option("--x-min", k1_min, "sweep start (log spaced)");
  k1->add_option("--x-max", k1_max, "sweep end");
  k1->add_option("--n", k1_n, "sweep points (default 200)");
  k1->add_option("--out", k1_out, "sweep CSV path (x,k1)");

  std::string langevin_path;
  auto* langevin = app.add_subcommand("langevin", "collision-capture rate estimates");
  langevin->add_option("config", langevin_path, "config with gas/ion parameters")
      ->required();

  std::string sweep_path;
  auto* sweep = app.add_subcommand("vk-sweep", "surface-mode coupling V_k over k");
  sweep->add_option("config", sweep_path, "config with coupling parameters")
      ->required();

  try {
    app.parse(argc, argv);

    if (*run) return run_command(config_path, "");
    if (*preset) return preset_command(preset_list, out_dir);
    if (*k1) {
      if (*k1_point) {
        const double value = iondecay::bessel_k1(k1_x);
        std::cout << "x = " << iondecay::format_g9(k1_x) << '\n'
                  << "k1 = " << iondecay::format_g9(value) << '\n';
        return exit_ok;
      }
      if (!(k1_min > 0.0) || !(k1_max > k1_min) || k1_n < 2) {
        throw iondecay::ConfigError("k1 sweep needs 0 < --x-min < --x-max, --n >= 2");
      }
      std::vector<double> xs(k1_n), values(k1_n);
      for (int i = 0; i < k1_n; ++i) {
        xs[i] = k1_min * std::pow(k1_max / k1_min, double(i) / (k1_n - 1));
        values[i] = iondecay::bessel_k1(xs[i]);
      }
      std::ostringstream table;
      iondecay::write_xy_csv(table, "x,k1", xs, values);
      if (k1_out.empty()) {
        std::cout << table.str();
      } else {
        std::ofstream file(k1_out, std::ios::binary);
        if (!file) throw iondecay::IoError("cannot open for writing: " + k1_out);
        file << table.str();
        std::cout << k1_out << '\n';
      }
      return exit_ok;
    }
    if (*langevin) return run_command(langevin_path, "langevin");
    if (*sweep) return run_command(sweep_path, "coupling_sweep");
    return exit_config;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? exit_ok : exit_config;
  } catch (const iondecay::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return exit_config;
  } catch (const iondecay::DomainError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return exit_config;
  } catch (const iondecay::IoError& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return exit_io;
  } catch (const iondecay::Error& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return exit_numeric;
  } catch (const std::overflow_error& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return exit_numeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_numeric;
  }
}
