#pragma once

// Degenerate discrete energy spectra.
//
// A spectrum is the rearranged, shifted list of distinct energies
//   rho_0 = 0 < rho_1 < rho_2 < ...
// each carrying a finite degeneracy d_n >= 1. The diagonal Hamiltonian
// (eigenvalue rho_n with multiplicity d_n) is represented by this type alone;
// no intra-level basis is stored because every observable computed downstream
// depends only on (rho_n, d_n).

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace degcs {

struct EnergyLevel {
  double rho = 0.0;         ///< dimensionless energy, hbar = omega = 1
  std::int64_t degeneracy = 1;

  friend bool operator==(const EnergyLevel&, const EnergyLevel&) = default;
};

/// Immutable validated spectrum. Copies share storage, so passing by value is
/// cheap and safe across threads.
class DegenerateSpectrum {
 public:
  /// Validates: size >= 2, levels[0].rho == 0, strictly increasing rho,
  /// every degeneracy >= 1, all energies finite.
  /// Throws EmptySpectrum, NonIncreasingEnergy, ZeroDegeneracy.
  DegenerateSpectrum(std::string label, std::vector<EnergyLevel> levels);

  const std::string& label() const noexcept { return data_->label; }
  std::span<const EnergyLevel> levels() const noexcept { return data_->levels; }
  std::size_t size() const noexcept { return data_->levels.size(); }

  double rho(std::size_t n) const { return data_->levels[n].rho; }
  std::int64_t degeneracy(std::size_t n) const { return data_->levels[n].degeneracy; }

  /// True when every |rho_n - round(rho_n)| < 1e-12. Gazeau-Klauder quantities
  /// are 2*pi-periodic in the evolution parameter only for such spectra.
  bool is_integer_valued() const noexcept { return data_->integer_valued; }

  friend bool operator==(const DegenerateSpectrum& a, const DegenerateSpectrum& b) {
    return a.label() == b.label() && a.data_->levels == b.data_->levels;
  }

 private:
  struct Data {
    std::string label;
    std::vector<EnergyLevel> levels;
    bool integer_valued = false;
  };
  std::shared_ptr<const Data> data_;
};

/// Particle in a 2D square box: distinct values of n^2 + m^2 - 2 over n, m >= 1,
/// with exact lattice-point degeneracies. Requires level_count >= 2.
DegenerateSpectrum build_box2d(std::size_t level_count);

/// 3D isotropic oscillator: rho = nu, d = (nu + 1)(nu + 2) / 2.
DegenerateSpectrum build_ho3d(std::size_t level_count);

/// 2D isotropic oscillator: rho = nu, d = nu + 1.
DegenerateSpectrum build_ho2d(std::size_t level_count);

/// 1D oscillator with no degeneracy; its coherent state is the Glauber state.
DegenerateSpectrum build_nondegenerate_ho(std::size_t level_count);

/// Parses the plain-text custom format: one "<rho> <degeneracy>" pair per line,
/// '#' comments and blank lines ignored. A "# label: <name>" comment sets the
/// label (default "custom"). Energies are shifted so the first one is zero.
/// Throws MalformedLine, NonIncreasingEnergy, ZeroDegeneracy, EmptySpectrum.
DegenerateSpectrum load_custom(std::string_view source);

/// Inverse of load_custom; round-trips exactly (17 significant digits).
std::string serialize(const DegenerateSpectrum& spectrum);

/// Number of pairs (n, m), n, m >= 1, with n^2 + m^2 = rho + 2, found by direct
/// enumeration. Independent cross-check of build_box2d.
std::int64_t degeneracy_oracle_box2d(std::int64_t rho);

}  // namespace degcs
