#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "clothoid/curve.hpp"

namespace clothoid::io {

enum class Part { real, imag, both };

Part part_from_string(std::string_view name);
std::string_view to_string(Part part);

/// "%.17g": 17 significant digits, read back bit-exactly by strtod().
std::string format_number(double v);

/// "s,x_re,y_re,z_re,x_im,y_im,z_im" restricted to the requested part.
std::string csv_header(Part part);

void write_csv(std::ostream& out, const Curve& curve, Part part);

struct JsonMeta {
  double s_min = 0.0;
  double s_max = 0.0;
  Origin origin = Origin::at_shift;
};

/// {"params": {...}, "columns": [...], "samples": [[s, x_re, y_re, z_re, x_im, y_im, z_im], ...]}
void write_json(std::ostream& out, const Curve& curve, const JsonMeta& meta);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Parses the CSV written by write_csv. Throws DomainError on malformed input.
Table read_csv(std::istream& in);

/// Rebuilds samples from a full (part == both) table.
std::vector<CurveSample> samples_from_table(const Table& table);

}  // namespace clothoid::io
