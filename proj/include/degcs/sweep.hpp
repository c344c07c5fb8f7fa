#pragma once

// Parameter sweeps over z (and optionally gamma), figure presets, and record
// emission. Sweep points run on a worker pool; records always come back in
// z-major, then gamma, order.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "degcs/dynamics.hpp"
#include "degcs/phase.hpp"
#include "degcs/spectrum.hpp"
#include "degcs/state.hpp"

namespace degcs::cli {

enum class OutputFormat { csv, json };

struct SweepConfig {
  /// box2d | ho2d | ho3d | glauber | custom:<path>
  std::string system = "box2d";
  double z_min = 0.0;
  double z_max = 0.0;
  std::size_t z_steps = 1;
  /// When non-empty, replaces the z_min/z_max/z_steps range.
  std::vector<double> z_list;
  PhaseGrid phase_grid;
  std::optional<EvolutionGrid> evolution;
  TruncationPolicy truncation;
  OutputFormat output_format = OutputFormat::csv;
  std::optional<std::string> plot_path;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned workers = 0;

  /// Throws std::invalid_argument for an inconsistent range.
  void validate() const;
  std::vector<double> z_values() const;
};

struct OutputRecord {
  double z = 0.0;
  std::optional<double> gamma;
  std::string observable;
  std::optional<double> value;  ///< empty means "undefined"
  std::optional<double> theta;  ///< set for density rows
  std::string error;            ///< error kind when value is undefined

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

/// Observable names accepted by run_sweep.
const std::vector<std::string>& known_observables();

/// Builds the spectrum named by a selector. Built-in systems get
/// truncation.max_levels + 1 levels (one spare level for the ladder products).
/// Throws std::invalid_argument for an unknown selector, IoError for an
/// unreadable custom file, and spectrum errors for malformed content.
DegenerateSpectrum resolve_system(std::string_view selector, const TruncationPolicy& truncation);

/// Evaluates the requested observables at every sweep point. Module errors are
/// recorded per row (value undefined, error = kind) and never abort the sweep.
/// Throws UnknownObservable for a bad name.
std::vector<OutputRecord> run_sweep(const SweepConfig& config,
                                    const std::vector<std::string>& observables);
std::vector<OutputRecord> run_sweep(const DegenerateSpectrum& spectrum, const SweepConfig& config,
                                    const std::vector<std::string>& observables);

struct FigurePreset {
  std::string name;
  std::string description;
  SweepConfig config;
  std::vector<std::string> observables;
};

const std::vector<std::string>& preset_names();

/// Default configuration of fig1..fig10. Throws UnknownPreset.
FigurePreset figure_preset(std::string_view name);

struct PresetOverrides {
  std::optional<std::string> system;
  std::optional<double> z_min;
  std::optional<double> z_max;
  std::optional<std::size_t> z_steps;
  std::optional<std::size_t> theta_points;
  std::optional<double> theta0;
  std::optional<double> gamma_min;
  std::optional<double> gamma_max;
  std::optional<std::size_t> gamma_steps;
  std::optional<std::size_t> max_levels;
  std::optional<double> tail_tolerance;
  std::optional<unsigned> workers;

  /// Applies the set fields. Any z-range field drops the preset's z list.
  void apply(SweepConfig& config) const;
};

std::vector<OutputRecord> run_figure_preset(std::string_view name,
                                            const PresetOverrides& overrides = {});

// Emission -------------------------------------------------------------------

/// Header "z,gamma,observable,value,theta,error"; doubles at 17 significant
/// digits; undefined values written as "undefined".
void write_csv(std::ostream& out, const std::vector<OutputRecord>& records);
std::string to_csv(const std::vector<OutputRecord>& records);

/// Array of objects with keys z, gamma, observable, value, theta, error
/// (null where absent; value "undefined" when undefined).
std::string to_json(const std::vector<OutputRecord>& records);
std::vector<OutputRecord> from_json(std::string_view text);

/// Static SVG rendering: a heat map when the records span both z and gamma,
/// line charts otherwise. No accuracy contract.
std::string render_svg(const std::vector<OutputRecord>& records, std::string_view title);

/// Writes records to out_path (stdout when empty) and the SVG when plot_path
/// is set. Throws IoError.
void emit(const std::vector<OutputRecord>& records, OutputFormat format,
          const std::optional<std::string>& out_path, const std::optional<std::string>& plot_path,
          std::string_view title = "");

}  // namespace degcs::cli
