// scenario.hpp — named scenario runner: validates a config, runs the matching
// evolver, and writes CSV/SVG artifacts with the resolved config echoed in
// their headers

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "iondecay/config.hpp"

namespace iondecay {

struct ScenarioResult {
  Config resolved;  // full config after defaults and derived keys
  std::vector<std::filesystem::path> artifacts;
};

// Modes: ajc, ajc_oracle, carrier, carrier_grid, heuristic, coupling_sweep,
// langevin, pulse_demo. Identical configs produce bit-identical CSV.
ScenarioResult run_scenario(const Config& cfg);

// Known preset names: fig2, fig3, fig4a, fig4b.
std::vector<std::string> preset_names();

// Expands a preset to its fully resolved scenario configs (fig2 yields one
// grid per snapshot time). Throws ConfigError for unknown names.
std::vector<Config> expand_preset(const std::string& name,
                                  const std::filesystem::path& out_dir = ".");

}  // namespace iondecay
