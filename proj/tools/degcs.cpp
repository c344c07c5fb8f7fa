// Command-line front end: spectra, observable sweeps and figure presets.
//
// Exit codes: 0 success, 1 usage error, 2 data or convergence error.

#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "degcs/errors.hpp"
#include "degcs/spectrum.hpp"
#include "degcs/sweep.hpp"

namespace {

using namespace degcs;
using namespace degcs::cli;

struct Flags {
  PresetOverrides overrides;
  std::string format = "csv";
  std::optional<std::string> plot;
  std::optional<std::string> out;
  std::size_t levels = 23;
  std::string figure;
};

void add_sweep_flags(CLI::App* cmd, Flags& f) {
  auto& o = f.overrides;
  cmd->add_option("--system", o.system, "box2d | ho2d | ho3d | glauber | custom:<path>");
  cmd->add_option("--z-min", o.z_min, "first z value");
  cmd->add_option("--z-max", o.z_max, "last z value");
  cmd->add_option("--z-steps", o.z_steps, "number of z values");
  cmd->add_option("--theta-points", o.theta_points, "phase grid size (even, >= 16)");
  cmd->add_option("--theta0", o.theta0, "phase window origin (default -pi)");
  cmd->add_option("--gamma-min", o.gamma_min, "first evolution parameter");
  cmd->add_option("--gamma-max", o.gamma_max, "last evolution parameter");
  cmd->add_option("--gamma-steps", o.gamma_steps, "number of gamma values");
  cmd->add_option("--max-levels", o.max_levels, "series truncation cap");
  cmd->add_option("--tail-tol", o.tail_tolerance, "relative tail tolerance");
  cmd->add_option("--workers", o.workers, "worker threads (0 = all cores)");
  cmd->add_option("--format", f.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--plot", f.plot, "write an SVG chart to this path");
  cmd->add_option("--out", f.out, "output path (default stdout)");
}

SweepConfig default_config() {
  SweepConfig c;
  c.system = "box2d";
  c.z_min = 0.0;
  c.z_max = 5.0;
  c.z_steps = 21;
  return c;
}

const std::map<std::string, std::vector<std::string>>& subcommand_observables() {
  static const std::map<std::string, std::vector<std::string>> table = {
      {"mandel", {"mean_number", "number_variance", "mandel"}},
      {"phase-dist", {"phase_density"}},
      {"squeezing", {"number_variance", "phase_variance", "commutator", "s_number", "s_phase"}},
      {"entropy", {"r_number", "r_phase", "entropy_total", "entropy_margin"}},
      {"dynamics", {"r_number", "gk_r_phase", "gk_entropy_total", "gk_phase_variance"}},
      {"quadcheck", {"var_x", "var_p", "ladder_commutator", "quad_deviation"}},
  };
  return table;
}

int run(int argc, char** argv) {
  CLI::App app{"Coherent states of degenerate spectra: nonclassicality observables"};
  app.require_subcommand(1);

  Flags flags;
  std::map<std::string, CLI::App*> commands;

  auto* spectrum_cmd = app.add_subcommand("spectrum", "print a spectrum in the custom text format");
  spectrum_cmd->add_option("--system", flags.overrides.system, "box2d | ho2d | ho3d | glauber | custom:<path>");
  spectrum_cmd->add_option("--levels", flags.levels, "number of levels (built-in systems)")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
  spectrum_cmd->add_option("--out", flags.out, "output path (default stdout)");

  for (const auto& [name, observables] : subcommand_observables()) {
    auto* cmd = app.add_subcommand(name, "sweep: " + [&] {
      std::string list;
      for (const auto& o : observables) list += (list.empty() ? "" : ", ") + o;
      return list;
    }());
    add_sweep_flags(cmd, flags);
    commands[name] = cmd;
  }

  auto* figure_cmd = app.add_subcommand("figure", "run a figure preset (fig1..fig10)");
  figure_cmd->add_option("name", flags.figure, "preset name")->required();
  add_sweep_flags(figure_cmd, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  const OutputFormat format = flags.format == "json" ? OutputFormat::json : OutputFormat::csv;

  try {
    if (spectrum_cmd->parsed()) {
      TruncationPolicy policy;
      policy.max_levels = flags.levels - 1;
      const auto spectrum = resolve_system(flags.overrides.system.value_or("box2d"), policy);
      const std::string text = serialize(spectrum);
      if (flags.out) {
        std::ofstream out(*flags.out);
        if (!out) throw IoError("cannot open '" + *flags.out + "' for writing");
        out << text;
      } else {
        std::cout << text;
      }
      return 0;
    }

    if (figure_cmd->parsed()) {
      const auto preset = figure_preset(flags.figure);
      const auto records = run_figure_preset(flags.figure, flags.overrides);
      emit(records, format, flags.out, flags.plot, preset.name + ": " + preset.description);
      return 0;
    }

    for (const auto& [name, cmd] : commands) {
      if (!cmd->parsed()) continue;
      SweepConfig config = default_config();
      if (name == "dynamics") config.evolution = EvolutionGrid{0.0, 2.0 * std::numbers::pi, 65};
      flags.overrides.apply(config);
      const auto records = run_sweep(config, subcommand_observables().at(name));
      emit(records, format, flags.out, flags.plot, name + " (" + config.system + ")");
      return 0;
    }
  } catch (const UnknownPreset& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    std::cerr << "error [" << e.kind() << "]: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
