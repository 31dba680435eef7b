#pragma once

// Tabular output shared by the CLI commands: named real columns plus
// metadata, serialized as CSV (header row + data) or JSON {metadata, columns}.
// Every number is printed with 17 significant digits.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "circdual/auxfun.hpp"

namespace circdual {

inline constexpr std::string_view kToolVersion = "1.0.0";
// Fixed unless the caller supplies one, so repeated runs are byte-identical.
inline constexpr std::string_view kDefaultTimestamp = "1970-01-01T00:00:00Z";

using MetaValue = std::variant<std::string, double, std::int64_t, bool>;

struct FigureData {
  std::string command;
  std::string timestamp = std::string(kDefaultTimestamp);
  std::vector<std::pair<std::string, MetaValue>> parameters;
  std::vector<std::pair<std::string, MetaValue>> summary;
  std::vector<std::string> column_names;
  std::vector<std::vector<double>> columns;

  void add_column(std::string name, std::vector<double> values);
  const std::vector<double>& column(std::string_view name) const;
  std::size_t rows() const noexcept { return columns.empty() ? 0 : columns.front().size(); }
  // Equal column lengths and a command name.
  void validate() const;
};

std::string format_number(double value);

void write_csv(const FigureData& data, std::ostream& out);
void write_json(const FigureData& data, std::ostream& out);

FigureData emit_spectrum(std::size_t n, double omega);

std::vector<double> default_domain_radii();
// Image of |z| = r under map_y for each r, closed (theta runs 0..2 pi inclusive).
// The pole at z = -1 (r = 1, theta = pi) is written as +inf.
FigureData emit_domain_map(const std::vector<double>& radii, std::size_t samples_per_circle);

// f(phi) on phi = -pi + 2 pi k / samples, k = 0..samples.
FigureData emit_f_curve(std::size_t samples, const SeriesAccuracy& acc = {});

}  // namespace circdual
