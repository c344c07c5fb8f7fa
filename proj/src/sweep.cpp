#include "degcs/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "degcs/entropic.hpp"
#include "degcs/errors.hpp"

namespace degcs::cli {

namespace {

enum class Shape { per_z, per_theta, per_gamma };

struct ObservableSpec {
  std::string name;
  Shape shape;
};

const std::vector<ObservableSpec>& observable_table() {
  static const std::vector<ObservableSpec> table = {
      {"mean_number", Shape::per_z},       {"second_moment", Shape::per_z},
      {"number_variance", Shape::per_z},   {"mandel", Shape::per_z},
      {"r_number", Shape::per_z},          {"r_phase", Shape::per_z},
      {"entropy_total", Shape::per_z},     {"entropy_margin", Shape::per_z},
      {"commutator", Shape::per_z},        {"phase_variance", Shape::per_z},
      {"s_number", Shape::per_z},          {"s_phase", Shape::per_z},
      {"var_x", Shape::per_z},             {"var_p", Shape::per_z},
      {"ladder_commutator", Shape::per_z}, {"quad_deviation", Shape::per_z},
      {"phase_density", Shape::per_theta}, {"gk_r_phase", Shape::per_gamma},
      {"gk_entropy_total", Shape::per_gamma}, {"gk_phase_variance", Shape::per_gamma},
  };
  return table;
}

Shape shape_of(const std::string& name) {
  for (const auto& spec : observable_table()) {
    if (spec.name == name) return spec.shape;
  }
  throw UnknownObservable("unknown observable '" + name + "'");
}

// Lazily computed quantities at one z. Every getter may throw a module error.
class PointContext {
 public:
  PointContext(const StateWeights& state, const PhaseGrid& grid) : state_(state), grid_(grid) {}

  const PhaseDistribution& distribution() {
    if (!distribution_) distribution_ = phase_distribution(state_, grid_);
    return *distribution_;
  }
  double r_number() {
    if (!r_number_) r_number_ = number_entropy(state_);
    return *r_number_;
  }
  double r_phase() {
    if (!r_phase_) r_phase_ = phase_entropy(distribution());
    return *r_phase_;
  }
  const SqueezingReport& squeezing() {
    if (!squeezing_) squeezing_ = squeezing_report(state_, grid_);
    return *squeezing_;
  }
  const QuadratureReport& quadrature() {
    if (!quadrature_) quadrature_ = quadrature_report(state_);
    return *quadrature_;
  }

  double scalar(const std::string& name) {
    if (name == "mean_number") return mean_number(state_);
    if (name == "second_moment") return second_moment_number(state_);
    if (name == "number_variance") return number_variance(state_);
    if (name == "mandel") return mandel_q(state_);
    if (name == "r_number") return r_number();
    if (name == "r_phase") return r_phase();
    if (name == "entropy_total") return r_number() + r_phase();
    if (name == "entropy_margin") return make_entropy_report(r_number(), r_phase()).margin;
    if (name == "commutator") return number_phase_commutator(state_, grid_);
    if (name == "phase_variance") return phase_variance(state_, grid_);
    if (name == "s_number") return squeezing().s_number;
    if (name == "s_phase") return squeezing().s_phase;
    if (name == "var_x") return quadrature().var_x;
    if (name == "var_p") return quadrature().var_p;
    if (name == "ladder_commutator") return quadrature().commutator_expectation;
    if (name == "quad_deviation") return quadrature().max_relative_deviation;
    throw UnknownObservable("unknown observable '" + name + "'");
  }

  double evolved(const std::string& name, double gamma) {
    if (name == "gk_r_phase") return gk_phase_entropy(state_, grid_, gamma);
    if (name == "gk_entropy_total") return r_number() + gk_phase_entropy(state_, grid_, gamma);
    if (name == "gk_phase_variance") return gk_phase_variance(state_, gamma);
    throw UnknownObservable("unknown observable '" + name + "'");
  }

 private:
  const StateWeights& state_;
  const PhaseGrid& grid_;
  std::optional<PhaseDistribution> distribution_;
  std::optional<double> r_number_;
  std::optional<double> r_phase_;
  std::optional<SqueezingReport> squeezing_;
  std::optional<QuadratureReport> quadrature_;
};

OutputRecord failed(double z, std::optional<double> gamma, const std::string& observable,
                    std::string kind) {
  return {z, gamma, observable, std::nullopt, std::nullopt, std::move(kind)};
}

// Runs fn, turning library errors into an undefined row.
template <typename Fn>
OutputRecord guarded(double z, std::optional<double> gamma, const std::string& observable,
                     Fn&& fn) {
  try {
    return {z, gamma, observable, fn(), std::nullopt, {}};
  } catch (const Error& e) {
    return failed(z, gamma, observable, e.kind());
  } catch (const std::domain_error&) {
    return failed(z, gamma, observable, "DomainError");
  }
}

std::vector<OutputRecord> evaluate_point(const DegenerateSpectrum& spectrum,
                                         const SweepConfig& config, double z,
                                         const std::vector<std::string>& observables) {
  std::vector<OutputRecord> rows;
  std::vector<double> gammas;
  if (config.evolution) {
    for (std::size_t i = 0; i < config.evolution->steps; ++i) {
      gammas.push_back(config.evolution->gamma(i));
    }
  }

  std::optional<StateWeights> state;
  std::string state_error;
  try {
    state = make_state(spectrum, z, config.truncation);
  } catch (const Error& e) {
    state_error = e.kind();
  }

  if (!state) {
    for (const auto& name : observables) {
      if (shape_of(name) != Shape::per_gamma) rows.push_back(failed(z, std::nullopt, name, state_error));
    }
    for (double gamma : gammas) {
      for (const auto& name : observables) {
        if (shape_of(name) == Shape::per_gamma) rows.push_back(failed(z, gamma, name, state_error));
      }
    }
    return rows;
  }

  PointContext ctx(*state, config.phase_grid);
  for (const auto& name : observables) {
    switch (shape_of(name)) {
      case Shape::per_z:
        rows.push_back(guarded(z, std::nullopt, name, [&] { return ctx.scalar(name); }));
        break;
      case Shape::per_theta: {
        const auto& dist = ctx.distribution();
        for (std::size_t j = 0; j < dist.values.size(); ++j) {
          rows.push_back({z, std::nullopt, name, dist.values[j], dist.grid.theta(j), {}});
        }
        break;
      }
      case Shape::per_gamma:
        break;
    }
  }
  for (double gamma : gammas) {
    for (const auto& name : observables) {
      if (shape_of(name) != Shape::per_gamma) continue;
      rows.push_back(guarded(z, gamma, name, [&] { return ctx.evolved(name, gamma); }));
    }
  }
  return rows;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

void SweepConfig::validate() const {
  phase_grid.validate();
  truncation.validate();
  if (evolution) evolution->validate();
  if (!z_list.empty()) return;
  if (!std::isfinite(z_min) || !std::isfinite(z_max) || z_max < z_min) {
    throw std::invalid_argument("z range must satisfy z_min <= z_max");
  }
  if (z_steps < 1) throw std::invalid_argument("z_steps must be >= 1");
  if (z_max > z_min && z_steps < 2) {
    throw std::invalid_argument("z_steps must be >= 2 when z_max > z_min");
  }
}

std::vector<double> SweepConfig::z_values() const {
  if (!z_list.empty()) return z_list;
  if (z_steps <= 1 || z_max == z_min) return {z_min};
  std::vector<double> out(z_steps);
  for (std::size_t i = 0; i < z_steps; ++i) {
    out[i] = z_min + (z_max - z_min) * static_cast<double>(i) / static_cast<double>(z_steps - 1);
  }
  return out;
}

const std::vector<std::string>& known_observables() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& spec : observable_table()) out.push_back(spec.name);
    return out;
  }();
  return names;
}

DegenerateSpectrum resolve_system(std::string_view selector, const TruncationPolicy& truncation) {
  const std::size_t levels = truncation.max_levels + 1;
  if (selector == "box2d") return build_box2d(levels);
  if (selector == "ho3d") return build_ho3d(levels);
  if (selector == "ho2d") return build_ho2d(levels);
  if (selector == "glauber") return build_nondegenerate_ho(levels);
  constexpr std::string_view kCustom = "custom:";
  if (selector.substr(0, kCustom.size()) == kCustom) {
    return load_custom(read_file(std::string(selector.substr(kCustom.size()))));
  }
  throw std::invalid_argument("unknown system '" + std::string(selector) +
                              "' (expected box2d, ho2d, ho3d, glauber or custom:<path>)");
}

std::vector<OutputRecord> run_sweep(const SweepConfig& config,
                                    const std::vector<std::string>& observables) {
  config.validate();
  return run_sweep(resolve_system(config.system, config.truncation), config, observables);
}

std::vector<OutputRecord> run_sweep(const DegenerateSpectrum& spectrum, const SweepConfig& config,
                                    const std::vector<std::string>& observables) {
  config.validate();
  bool needs_gamma = false;
  for (const auto& name : observables) needs_gamma |= shape_of(name) == Shape::per_gamma;
  if (needs_gamma && !config.evolution) {
    throw std::invalid_argument("gamma-dependent observables need an evolution grid");
  }

  const auto zs = config.z_values();
  std::vector<std::vector<OutputRecord>> blocks(zs.size());
  unsigned workers = config.workers ? config.workers : std::thread::hardware_concurrency();
  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(std::max<std::size_t>(zs.size(), 1)));

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < zs.size(); i = next++) {
      blocks[i] = evaluate_point(spectrum, config, zs[i], observables);
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  std::vector<OutputRecord> rows;
  for (auto& block : blocks) {
    rows.insert(rows.end(), std::make_move_iterator(block.begin()),
                std::make_move_iterator(block.end()));
  }
  return rows;
}

// Presets --------------------------------------------------------------------

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"fig1", "fig2", "fig3", "fig4", "fig5",
                                                 "fig6", "fig7", "fig8", "fig9", "fig10"};
  return names;
}

FigurePreset figure_preset(std::string_view name) {
  auto range = [](std::string system, double z_max, std::size_t steps) {
    SweepConfig c;
    c.system = std::move(system);
    c.z_min = 0.0;
    c.z_max = z_max;
    c.z_steps = steps;
    return c;
  };
  auto fixed = [](std::string system, std::vector<double> zs) {
    SweepConfig c;
    c.system = std::move(system);
    c.z_list = std::move(zs);
    return c;
  };
  auto evolving = [&](std::string system) {
    SweepConfig c;
    c.system = std::move(system);
    for (int z = 0; z <= 20; ++z) c.z_list.push_back(z);
    c.evolution = EvolutionGrid{0.0, 2.0 * std::numbers::pi, 129};
    return c;
  };
  const std::vector<std::string> entropies = {"r_number", "r_phase", "entropy_total"};
  const std::vector<std::string> squeezing = {"s_number", "s_phase"};

  if (name == "fig1") return {"fig1", "Mandel parameter vs z, 2D square box", range("box2d", 20, 81), {"mandel"}};
  if (name == "fig2") return {"fig2", "phase distribution at fixed z, 2D square box", fixed("box2d", {1, 2, 3}), {"phase_density"}};
  if (name == "fig3") return {"fig3", "number and phase squeezing vs z, 2D square box", range("box2d", 4, 81), squeezing};
  if (name == "fig4") return {"fig4", "number and phase entropies vs z, 2D square box", range("box2d", 20, 81), entropies};
  if (name == "fig5") return {"fig5", "Mandel parameter vs z, 3D oscillator", range("ho3d", 20, 81), {"mandel"}};
  if (name == "fig6") return {"fig6", "phase distribution at fixed z, 3D oscillator", fixed("ho3d", {1, 2, 3}), {"phase_density"}};
  if (name == "fig7") return {"fig7", "number and phase squeezing vs z, 3D oscillator", range("ho3d", 2, 81), squeezing};
  if (name == "fig8") return {"fig8", "number and phase entropies vs z, 3D oscillator", range("ho3d", 20, 81), entropies};
  if (name == "fig9") return {"fig9", "entropic sum over (z, gamma), 2D square box", evolving("box2d"), {"gk_entropy_total"}};
  if (name == "fig10") return {"fig10", "entropic sum over (z, gamma), 3D oscillator", evolving("ho3d"), {"gk_entropy_total"}};
  throw UnknownPreset("unknown figure preset '" + std::string(name) + "' (expected fig1..fig10)");
}

void PresetOverrides::apply(SweepConfig& config) const {
  if (system) config.system = *system;
  if (z_min || z_max || z_steps) {
    if (!config.z_list.empty()) {
      config.z_min = *std::min_element(config.z_list.begin(), config.z_list.end());
      config.z_max = *std::max_element(config.z_list.begin(), config.z_list.end());
      config.z_steps = config.z_list.size();
      config.z_list.clear();
    }
    if (z_min) config.z_min = *z_min;
    if (z_max) config.z_max = *z_max;
    if (z_steps) config.z_steps = *z_steps;
  }
  if (theta_points) config.phase_grid.points = *theta_points;
  if (theta0) config.phase_grid.theta0 = *theta0;
  if (gamma_min || gamma_max || gamma_steps) {
    EvolutionGrid grid = config.evolution.value_or(EvolutionGrid{0.0, 2.0 * std::numbers::pi, 65});
    if (gamma_min) grid.gamma_min = *gamma_min;
    if (gamma_max) grid.gamma_max = *gamma_max;
    if (gamma_steps) grid.steps = *gamma_steps;
    config.evolution = grid;
  }
  if (max_levels) config.truncation.max_levels = *max_levels;
  if (tail_tolerance) config.truncation.tail_tolerance = *tail_tolerance;
  if (workers) config.workers = *workers;
}

std::vector<OutputRecord> run_figure_preset(std::string_view name,
                                            const PresetOverrides& overrides) {
  auto preset = figure_preset(name);
  overrides.apply(preset.config);
  return run_sweep(preset.config, preset.observables);
}

}  // namespace degcs::cli
