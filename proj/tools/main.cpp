#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sweep.hpp"
#include "validation.hpp"
#include "wedgecp/kernels.hpp"

namespace {

using wedgecp::cli::Command;
using wedgecp::cli::ConfigError;
using wedgecp::cli::SweepConfig;

constexpr int kExitValidation = 1;
constexpr int kExitConfig = 2;
constexpr int kExitSingular = 3;

struct SweepFlags {
  std::string preset;
  std::string config_file;
  std::map<std::string, std::string> overrides;
};

void add_sweep_options(CLI::App* cmd, SweepFlags& flags) {
  cmd->add_option("--preset", flags.preset, "fig2, fig3 or fig4");
  cmd->add_option("--config", flags.config_file, "key=value config file");
  const std::pair<const char*, const char*> keys[] = {
      {"atom", "atom file or 'unit'"},
      {"q", "wedge index, or a comma list such as 2,3,5"},
      {"phi", "V or MIN:MAX:STEPS"},
      {"phi-mode", "absolute (radians) or fraction (of pi/q)"},
      {"rho", "V, MIN:MAX:STEPS or logMIN:MAX:STEPS"},
      {"regime", "full, nr_wall, r_wall or cp"},
      {"out", "output path, '-' for stdout"},
      {"format", "csv or json"},
      {"threads", "evaluation threads"},
  };
  for (const auto& [name, help] : keys) {
    std::string key = name;
    std::replace(key.begin(), key.end(), '-', '_');
    cmd->add_option_function<std::string>(
        std::string("--") + name,
        [&flags, key](const std::string& v) { flags.overrides[key] = v; }, help);
  }
}

SweepConfig build_config(const SweepFlags& flags) {
  SweepConfig config;
  if (!flags.preset.empty()) {
    const auto p = wedgecp::cli::preset(flags.preset);
    if (!p) throw ConfigError("unknown preset '" + flags.preset + "'");
    for (const auto& [k, v] : *p) config.set(k, v);
  }
  if (!flags.config_file.empty()) {
    for (const auto& [k, v] : wedgecp::cli::read_config_file(flags.config_file)) {
      config.set(k, v);
    }
  }
  for (const auto& [k, v] : flags.overrides) config.set(k, v);
  config.validate();
  return config;
}

int run_sweep_command(Command command, const SweepFlags& flags) {
  try {
    const auto config = build_config(flags);
    wedgecp::cli::SweepOutcome outcome;
    if (config.output == "-") {
      outcome = wedgecp::cli::run_sweep(command, config, std::cout);
    } else {
      std::ofstream out(config.output, std::ios::binary);
      if (!out) throw ConfigError("cannot open output '" + config.output + "'");
      outcome = wedgecp::cli::run_sweep(command, config, out);
    }
    if (outcome.boundary_rows > 0) {
      std::cerr << "wedgecp: " << outcome.boundary_rows
                << " boundary row(s) flagged\n";
      if (outcome.total_rows == 1) return kExitSingular;
    }
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "wedgecp: " << e.what() << '\n';
    return kExitConfig;
  }
}

int run_validate(double perturbation) {
  wedgecp::kernels::set_full_kernel_perturbation(perturbation);
  const auto checks = wedgecp::cli::run_validation();
  wedgecp::kernels::set_full_kernel_perturbation(0.0);
  std::cout << wedgecp::cli::validation_report_json(checks) << '\n';
  for (const auto& c : checks) {
    if (!c.passed) return kExitValidation;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dispersion potential and force on an atom inside a conducting wedge"};
  app.require_subcommand(1);

  SweepFlags potential_flags;
  SweepFlags force_flags;
  double perturbation = 0.0;

  auto* potential = app.add_subcommand("potential", "V_total, V_direct, V_corner");
  add_sweep_options(potential, potential_flags);
  auto* force = app.add_subcommand("force", "F_rho, F_phi, F_rho_corner");
  add_sweep_options(force, force_flags);
  auto* validate = app.add_subcommand("validate", "run the acceptance checks");
  validate->add_option("--perturb-kernel", perturbation)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  if (*potential) return run_sweep_command(Command::potential, potential_flags);
  if (*force) return run_sweep_command(Command::force, force_flags);
  return run_validate(perturbation);
}
