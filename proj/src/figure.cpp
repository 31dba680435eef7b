#include "circdual/figure.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace circdual {

void FigureData::add_column(std::string name, std::vector<double> values) {
  if (!columns.empty() && values.size() != rows())
    throw std::invalid_argument("FigureData: column '" + name + "' has " +
                                std::to_string(values.size()) + " rows, expected " +
                                std::to_string(rows()));
  column_names.push_back(std::move(name));
  columns.push_back(std::move(values));
}

const std::vector<double>& FigureData::column(std::string_view name) const {
  for (std::size_t i = 0; i < column_names.size(); ++i)
    if (column_names[i] == name) return columns[i];
  throw std::out_of_range("FigureData: no column named '" + std::string(name) + "'");
}

void FigureData::validate() const {
  if (command.empty()) throw std::invalid_argument("FigureData: missing command");
  if (column_names.size() != columns.size())
    throw std::invalid_argument("FigureData: column names and data disagree");
  for (const auto& c : columns)
    if (c.size() != rows()) throw std::invalid_argument("FigureData: ragged columns");
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

namespace {

std::string json_number(double value) {
  return std::isfinite(value) ? format_number(value) : "null";
}

std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

std::string json_value(const MetaValue& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::string>) return json_string(x);
        else if constexpr (std::is_same_v<T, double>) return json_number(x);
        else if constexpr (std::is_same_v<T, bool>) return x ? "true" : "false";
        else return std::to_string(x);
      },
      v);
}

void write_object(std::ostream& out, const std::vector<std::pair<std::string, MetaValue>>& items,
                  const char* indent) {
  out << "{";
  for (std::size_t i = 0; i < items.size(); ++i) {
    out << (i ? ",\n" : "\n") << indent << "  " << json_string(items[i].first) << ": "
        << json_value(items[i].second);
  }
  if (!items.empty()) out << "\n" << indent;
  out << "}";
}

}  // namespace

void write_csv(const FigureData& data, std::ostream& out) {
  data.validate();
  for (std::size_t c = 0; c < data.column_names.size(); ++c)
    out << (c ? "," : "") << data.column_names[c];
  out << "\n";
  for (std::size_t r = 0; r < data.rows(); ++r) {
    for (std::size_t c = 0; c < data.columns.size(); ++c)
      out << (c ? "," : "") << format_number(data.columns[c][r]);
    out << "\n";
  }
}

void write_json(const FigureData& data, std::ostream& out) {
  data.validate();
  out << "{\n  \"metadata\": {\n";
  out << "    \"command\": " << json_string(data.command) << ",\n";
  out << "    \"tool_version\": " << json_string(std::string(kToolVersion)) << ",\n";
  out << "    \"timestamp\": " << json_string(data.timestamp) << ",\n";
  out << "    \"parameters\": ";
  write_object(out, data.parameters, "    ");
  out << ",\n    \"summary\": ";
  write_object(out, data.summary, "    ");
  out << "\n  },\n  \"columns\": {";
  for (std::size_t c = 0; c < data.columns.size(); ++c) {
    out << (c ? ",\n" : "\n") << "    " << json_string(data.column_names[c]) << ": [";
    const auto& col = data.columns[c];
    for (std::size_t r = 0; r < col.size(); ++r) out << (r ? ", " : "") << json_number(col[r]);
    out << "]";
  }
  if (!data.columns.empty()) out << "\n  ";
  out << "}\n}\n";
}

FigureData emit_spectrum(std::size_t n, double omega) {
  if (n == 0) throw std::invalid_argument("emit_spectrum: n must be at least 1");
  if (!(omega > 0.0)) throw std::invalid_argument("emit_spectrum: omega must be positive");
  FigureData fig;
  fig.command = "spectrum";
  fig.parameters = {{"n", static_cast<std::int64_t>(n)}, {"omega", omega}};
  std::vector<double> level(n), energy(n);
  for (std::size_t k = 0; k < n; ++k) {
    level[k] = static_cast<double>(k);
    energy[k] = static_cast<double>(k) * omega;
  }
  fig.add_column("level", std::move(level));
  fig.add_column("energy", std::move(energy));
  return fig;
}

std::vector<double> default_domain_radii() {
  std::vector<double> radii;
  for (int k = 1; k <= 20; ++k) radii.push_back(0.05 * k);
  return radii;
}

FigureData emit_domain_map(const std::vector<double>& radii, std::size_t samples_per_circle) {
  if (samples_per_circle < 8)
    throw std::invalid_argument("emit_domain_map: need at least 8 samples per circle");
  for (double r : radii)
    if (!(r > 0.0) || r > 1.0)
      throw DomainError("emit_domain_map: radii must lie in (0, 1] (first sheet only)");

  FigureData fig;
  fig.command = "map-domains";
  std::string radii_list;
  for (double r : radii) radii_list += (radii_list.empty() ? "" : ",") + format_number(r);
  fig.parameters = {{"radii", radii_list},
                    {"samples", static_cast<std::int64_t>(samples_per_circle)},
                    {"circles", static_cast<std::int64_t>(radii.size())}};
  std::vector<double> radius, theta, re_y, im_y;
  const double inf = std::numeric_limits<double>::infinity();
  for (double r : radii) {
    for (std::size_t k = 0; k <= samples_per_circle; ++k) {
      // Closing point reuses theta = 0 so first and last points coincide exactly.
      const std::size_t kk = k % samples_per_circle;
      const double th = 2.0 * std::numbers::pi * static_cast<double>(kk) /
                        static_cast<double>(samples_per_circle);
      Complex z = std::polar(r, th);
      // Put the exact special points on the grid where sin/cos rounding would miss them.
      if (2 * kk == samples_per_circle) z = -r;
      if (kk == 0) z = r;
      radius.push_back(r);
      theta.push_back(k == samples_per_circle ? 2.0 * std::numbers::pi : th);
      try {
        const Complex y = map_y(z);
        re_y.push_back(y.real());
        im_y.push_back(y.imag());
      } catch (const PoleError&) {
        re_y.push_back(inf);
        im_y.push_back(inf);
      }
    }
  }
  fig.add_column("radius", std::move(radius));
  fig.add_column("theta", std::move(theta));
  fig.add_column("re_y", std::move(re_y));
  fig.add_column("im_y", std::move(im_y));
  return fig;
}

FigureData emit_f_curve(std::size_t samples, const SeriesAccuracy& acc) {
  if (samples < 2) throw std::invalid_argument("emit_f_curve: need at least 2 samples");
  FigureData fig;
  fig.command = "f-curve";
  fig.parameters = {{"samples", static_cast<std::int64_t>(samples)}, {"abs_tol", acc.abs_tol}};
  std::vector<double> phi(samples + 1), re(samples + 1), im(samples + 1);
  double worst_error = 0.0;
  for (std::size_t k = 0; k <= samples; ++k) {
    phi[k] = -std::numbers::pi + 2.0 * std::numbers::pi * static_cast<double>(k) /
                                     static_cast<double>(samples);
    if (k == samples) phi[k] = std::numbers::pi;
    const auto v = eval_f(phi[k], acc);
    re[k] = v.value.real();
    im[k] = v.value.imag();
    worst_error = std::max(worst_error, v.error);
  }
  fig.summary = {{"max_error_estimate", worst_error}};
  fig.add_column("phi", std::move(phi));
  fig.add_column("re_f", std::move(re));
  fig.add_column("im_f", std::move(im));
  return fig;
}

}  // namespace circdual
