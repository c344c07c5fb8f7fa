#include "degcs/spectrum.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>

#include "degcs/errors.hpp"

namespace degcs {

namespace {

void require_level_count(std::size_t level_count) {
  if (level_count < 2) {
    throw std::invalid_argument("level_count must be >= 2");
  }
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\f\v");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\f\v");
  return s.substr(first, last - first + 1);
}

}  // namespace

DegenerateSpectrum::DegenerateSpectrum(std::string label, std::vector<EnergyLevel> levels) {
  if (levels.size() < 2) {
    throw EmptySpectrum("spectrum needs at least two levels, got " +
                        std::to_string(levels.size()));
  }
  bool integer_valued = true;
  for (std::size_t n = 0; n < levels.size(); ++n) {
    const auto& level = levels[n];
    if (!std::isfinite(level.rho)) {
      throw NonIncreasingEnergy("level " + std::to_string(n) + " has a non-finite energy");
    }
    if (level.degeneracy < 1) {
      throw ZeroDegeneracy("level " + std::to_string(n) + " has degeneracy " +
                           std::to_string(level.degeneracy));
    }
    if (n == 0 && level.rho != 0.0) {
      throw NonIncreasingEnergy("ground level must have rho = 0");
    }
    if (n > 0 && !(level.rho > levels[n - 1].rho)) {
      throw NonIncreasingEnergy("energies not strictly increasing at level " +
                                std::to_string(n));
    }
    if (std::abs(level.rho - std::round(level.rho)) >= 1e-12) integer_valued = false;
  }
  data_ = std::make_shared<const Data>(Data{std::move(label), std::move(levels), integer_valued});
}

DegenerateSpectrum build_box2d(std::size_t level_count) {
  require_level_count(level_count);
  // Energies E = n^2 + m^2 <= L^2 + 1 force n, m <= L, so every count taken
  // from the [1, L]^2 scan is complete.
  std::int64_t side = 4;
  for (;;) {
    const std::int64_t cutoff = side * side + 1;
    std::map<std::int64_t, std::int64_t> counts;
    for (std::int64_t n = 1; n <= side; ++n) {
      for (std::int64_t m = 1; m <= side; ++m) {
        const std::int64_t e = n * n + m * m;
        if (e <= cutoff) ++counts[e];
      }
    }
    if (counts.size() >= level_count) {
      std::vector<EnergyLevel> levels;
      levels.reserve(level_count);
      for (const auto& [energy, count] : counts) {
        if (levels.size() == level_count) break;
        levels.push_back({static_cast<double>(energy - 2), count});
      }
      return DegenerateSpectrum("box2d", std::move(levels));
    }
    side *= 2;
  }
}

DegenerateSpectrum build_ho3d(std::size_t level_count) {
  require_level_count(level_count);
  std::vector<EnergyLevel> levels(level_count);
  for (std::size_t nu = 0; nu < level_count; ++nu) {
    const auto v = static_cast<std::int64_t>(nu);
    levels[nu] = {static_cast<double>(nu), (v + 1) * (v + 2) / 2};
  }
  return DegenerateSpectrum("ho3d", std::move(levels));
}

DegenerateSpectrum build_ho2d(std::size_t level_count) {
  require_level_count(level_count);
  std::vector<EnergyLevel> levels(level_count);
  for (std::size_t nu = 0; nu < level_count; ++nu) {
    levels[nu] = {static_cast<double>(nu), static_cast<std::int64_t>(nu) + 1};
  }
  return DegenerateSpectrum("ho2d", std::move(levels));
}

DegenerateSpectrum build_nondegenerate_ho(std::size_t level_count) {
  require_level_count(level_count);
  std::vector<EnergyLevel> levels(level_count);
  for (std::size_t n = 0; n < level_count; ++n) {
    levels[n] = {static_cast<double>(n), 1};
  }
  return DegenerateSpectrum("glauber", std::move(levels));
}

DegenerateSpectrum load_custom(std::string_view source) {
  std::string label = "custom";
  std::vector<EnergyLevel> levels;
  std::size_t line_no = 0;
  while (!source.empty()) {
    const auto eol = source.find('\n');
    std::string_view line = source.substr(0, eol);
    source = eol == std::string_view::npos ? std::string_view{} : source.substr(eol + 1);
    ++line_no;

    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '#') {
      auto body = trim(line.substr(1));
      constexpr std::string_view kLabel = "label:";
      if (body.substr(0, kLabel.size()) == kLabel) {
        auto value = trim(body.substr(kLabel.size()));
        if (!value.empty()) label = std::string(value);
      }
      continue;
    }

    const std::string text(line);
    const char* begin = text.c_str();
    char* end = nullptr;
    errno = 0;
    const double rho = std::strtod(begin, &end);
    if (end == begin || errno == ERANGE || !std::isfinite(rho)) {
      throw MalformedLine("line " + std::to_string(line_no) + ": cannot parse energy in '" +
                          text + "'");
    }
    const char* deg_begin = end;
    errno = 0;
    const long long degeneracy = std::strtoll(deg_begin, &end, 10);
    if (end == deg_begin || errno == ERANGE) {
      throw MalformedLine("line " + std::to_string(line_no) + ": cannot parse degeneracy in '" +
                          text + "'");
    }
    if (!trim(std::string_view(end)).empty()) {
      throw MalformedLine("line " + std::to_string(line_no) + ": trailing characters in '" +
                          text + "'");
    }
    if (degeneracy < 1) {
      throw ZeroDegeneracy("line " + std::to_string(line_no) + ": degeneracy " +
                           std::to_string(degeneracy) + " < 1");
    }
    levels.push_back({rho, static_cast<std::int64_t>(degeneracy)});
  }

  if (levels.empty()) throw EmptySpectrum("no energy levels found");
  const double shift = levels.front().rho;
  for (auto& level : levels) level.rho -= shift;
  for (std::size_t n = 1; n < levels.size(); ++n) {
    if (!(levels[n].rho > levels[n - 1].rho)) {
      throw NonIncreasingEnergy("energies not strictly increasing at level " + std::to_string(n));
    }
  }
  return DegenerateSpectrum(std::move(label), std::move(levels));
}

std::string serialize(const DegenerateSpectrum& spectrum) {
  std::ostringstream out;
  out << "# label: " << spectrum.label() << '\n';
  out << "# rho degeneracy\n";
  char buf[64];
  for (const auto& level : spectrum.levels()) {
    std::snprintf(buf, sizeof buf, "%.17g %lld\n", level.rho,
                  static_cast<long long>(level.degeneracy));
    out << buf;
  }
  return out.str();
}

std::int64_t degeneracy_oracle_box2d(std::int64_t rho) {
  if (rho < 0) throw std::invalid_argument("rho must be nonnegative");
  const std::int64_t target = rho + 2;
  std::int64_t count = 0;
  for (std::int64_t n = 1; n * n < target; ++n) {
    const std::int64_t rest = target - n * n;
    auto m = static_cast<std::int64_t>(std::sqrt(static_cast<double>(rest)));
    while (m * m > rest) --m;
    while ((m + 1) * (m + 1) <= rest) ++m;
    if (m >= 1 && m * m == rest) ++count;
  }
  return count;
}

}  // namespace degcs
