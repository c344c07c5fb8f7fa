#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "degcs/errors.hpp"
#include "degcs/sweep.hpp"

namespace degcs::cli {

namespace {

using nlohmann::json;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_optional(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string();
}

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::optional<double> optional_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<OutputRecord>& records) {
  out << "z,gamma,observable,value,theta,error\n";
  for (const auto& r : records) {
    out << format_double(r.z) << ',' << format_optional(r.gamma) << ',' << r.observable << ','
        << (r.value ? format_double(*r.value) : std::string("undefined")) << ','
        << format_optional(r.theta) << ',' << r.error << '\n';
  }
}

std::string to_csv(const std::vector<OutputRecord>& records) {
  std::ostringstream out;
  write_csv(out, records);
  return out.str();
}

std::string to_json(const std::vector<OutputRecord>& records) {
  json array = json::array();
  for (const auto& r : records) {
    array.push_back({{"z", r.z},
                     {"gamma", optional_json(r.gamma)},
                     {"observable", r.observable},
                     {"value", r.value ? json(*r.value) : json("undefined")},
                     {"theta", optional_json(r.theta)},
                     {"error", r.error.empty() ? json(nullptr) : json(r.error)}});
  }
  return array.dump(1) + "\n";
}

std::vector<OutputRecord> from_json(std::string_view text) {
  const json array = json::parse(text);
  std::vector<OutputRecord> records;
  for (const auto& item : array) {
    OutputRecord r;
    r.z = item.at("z").get<double>();
    r.gamma = optional_from_json(item.at("gamma"));
    r.observable = item.at("observable").get<std::string>();
    const auto& value = item.at("value");
    if (value.is_number()) r.value = value.get<double>();
    r.theta = optional_from_json(item.at("theta"));
    if (!item.at("error").is_null()) r.error = item.at("error").get<std::string>();
    records.push_back(std::move(r));
  }
  return records;
}

// SVG ------------------------------------------------------------------------

namespace {

constexpr double kWidth = 720;
constexpr double kHeight = 440;
constexpr double kLeft = 70;
constexpr double kRight = 170;
constexpr double kTop = 40;
constexpr double kBottom = 50;

const char* palette(std::size_t i) {
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                 "#9467bd", "#8c564b", "#e377c2", "#17becf"};
  return colors[i % 8];
}

std::string escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Range {
  double lo = 0, hi = 1;
  void widen() {
    if (!(hi > lo)) {
      lo -= 0.5;
      hi += 0.5;
    }
  }
};

std::string heat_map(const std::vector<OutputRecord>& records, std::string_view title) {
  std::vector<double> zs, gammas;
  std::map<std::pair<double, double>, double> cells;
  Range v{INFINITY, -INFINITY};
  for (const auto& r : records) {
    if (!r.gamma || !r.value) continue;
    zs.push_back(r.z);
    gammas.push_back(*r.gamma);
    cells[{r.z, *r.gamma}] = *r.value;
    v.lo = std::min(v.lo, *r.value);
    v.hi = std::max(v.hi, *r.value);
  }
  std::sort(zs.begin(), zs.end());
  zs.erase(std::unique(zs.begin(), zs.end()), zs.end());
  std::sort(gammas.begin(), gammas.end());
  gammas.erase(std::unique(gammas.begin(), gammas.end()), gammas.end());
  v.widen();

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const double cw = plot_w / static_cast<double>(zs.size());
  const double ch = plot_h / static_cast<double>(gammas.size());

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << kLeft << "\" y=\"24\" font-size=\"14\">" << escape(title) << "</text>\n";
  for (std::size_t i = 0; i < zs.size(); ++i) {
    for (std::size_t j = 0; j < gammas.size(); ++j) {
      auto it = cells.find({zs[i], gammas[j]});
      if (it == cells.end()) continue;
      const double t = (it->second - v.lo) / (v.hi - v.lo);
      const int red = static_cast<int>(255 * t);
      const int blue = 255 - red;
      svg << "<rect x=\"" << kLeft + cw * static_cast<double>(i) << "\" y=\""
          << kTop + plot_h - ch * static_cast<double>(j + 1) << "\" width=\"" << cw + 0.5
          << "\" height=\"" << ch + 0.5 << "\" fill=\"rgb(" << red << ",64," << blue << ")\"/>\n";
    }
  }
  svg << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 12
      << "\" font-size=\"12\">z</text>\n";
  svg << "<text x=\"16\" y=\"" << kTop + plot_h / 2 << "\" font-size=\"12\">gamma</text>\n";
  svg << "<text x=\"" << kWidth - kRight + 12 << "\" y=\"" << kTop + 14
      << "\" font-size=\"11\">max " << format_double(v.hi).substr(0, 8) << "</text>\n";
  svg << "<text x=\"" << kWidth - kRight + 12 << "\" y=\"" << kTop + plot_h
      << "\" font-size=\"11\">min " << format_double(v.lo).substr(0, 8) << "</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

std::string line_chart(const std::vector<OutputRecord>& records, std::string_view title) {
  // The x axis is theta for density rows, z when it varies, gamma otherwise.
  std::set<double> distinct_z;
  bool has_theta = false;
  for (const auto& r : records) {
    distinct_z.insert(r.z);
    has_theta |= r.theta.has_value();
  }
  const bool x_is_z = !has_theta && distinct_z.size() > 1;
  auto x_of = [&](const OutputRecord& r) -> std::optional<double> {
    if (r.theta) return r.theta;
    if (x_is_z) return r.z;
    return r.gamma ? r.gamma : std::optional<double>(r.z);
  };
  const char* x_label = has_theta ? "theta" : (x_is_z ? "z" : "gamma");

  std::map<std::string, std::vector<std::pair<double, double>>> series;
  Range x{INFINITY, -INFINITY}, y{INFINITY, -INFINITY};
  for (const auto& r : records) {
    const auto xv = x_of(r);
    if (!xv || !r.value || !std::isfinite(*r.value)) continue;
    std::string key = r.observable;
    if (!x_is_z && distinct_z.size() > 1) key += " z=" + format_double(r.z).substr(0, 6);
    series[key].emplace_back(*xv, *r.value);
    x.lo = std::min(x.lo, *xv);
    x.hi = std::max(x.hi, *xv);
    y.lo = std::min(y.lo, *r.value);
    y.hi = std::max(y.hi, *r.value);
  }
  if (series.empty()) {
    x = {0, 1};
    y = {0, 1};
  }
  x.widen();
  y.widen();

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto sx = [&](double v) { return kLeft + (v - x.lo) / (x.hi - x.lo) * plot_w; };
  auto sy = [&](double v) { return kTop + plot_h - (v - y.lo) / (y.hi - y.lo) * plot_h; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << kLeft << "\" y=\"24\" font-size=\"14\">" << escape(title) << "</text>\n";
  svg << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << plot_w << "\" height=\""
      << plot_h << "\" fill=\"none\" stroke=\"#444\"/>\n";
  if (y.lo < 0 && y.hi > 0) {
    svg << "<line x1=\"" << kLeft << "\" x2=\"" << kLeft + plot_w << "\" y1=\"" << sy(0)
        << "\" y2=\"" << sy(0) << "\" stroke=\"#bbb\" stroke-dasharray=\"4 3\"/>\n";
  }
  for (int tick = 0; tick <= 4; ++tick) {
    const double xv = x.lo + (x.hi - x.lo) * tick / 4.0;
    const double yv = y.lo + (y.hi - y.lo) * tick / 4.0;
    svg << "<text x=\"" << sx(xv) - 10 << "\" y=\"" << kTop + plot_h + 16
        << "\" font-size=\"10\">" << format_double(xv).substr(0, 6) << "</text>\n";
    svg << "<text x=\"8\" y=\"" << sy(yv) + 4 << "\" font-size=\"10\">"
        << format_double(yv).substr(0, 7) << "</text>\n";
  }
  svg << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 12 << "\" font-size=\"12\">"
      << x_label << "</text>\n";

  std::size_t index = 0;
  for (const auto& [name, points] : series) {
    svg << "<polyline fill=\"none\" stroke-width=\"1.5\" stroke=\"" << palette(index)
        << "\" points=\"";
    for (const auto& [px, py] : points) svg << sx(px) << ',' << sy(py) << ' ';
    svg << "\"/>\n";
    svg << "<text x=\"" << kWidth - kRight + 10 << "\" y=\"" << kTop + 14 + 16.0 * index
        << "\" font-size=\"11\" fill=\"" << palette(index) << "\">" << escape(name) << "</text>\n";
    ++index;
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace

std::string render_svg(const std::vector<OutputRecord>& records, std::string_view title) {
  std::set<double> zs, gammas;
  for (const auto& r : records) {
    zs.insert(r.z);
    if (r.gamma) gammas.insert(*r.gamma);
  }
  if (zs.size() > 1 && gammas.size() > 1) return heat_map(records, title);
  return line_chart(records, title);
}

void emit(const std::vector<OutputRecord>& records, OutputFormat format,
          const std::optional<std::string>& out_path, const std::optional<std::string>& plot_path,
          std::string_view title) {
  const std::string text = format == OutputFormat::csv ? to_csv(records) : to_json(records);
  if (out_path && !out_path->empty() && *out_path != "-") {
    write_text(*out_path, text);
  } else {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw IoError("failed writing to stdout");
  }
  if (plot_path) write_text(*plot_path, render_svg(records, title));
}

}  // namespace degcs::cli
