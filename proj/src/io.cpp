#include "clothoid/io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

#include "clothoid/errors.hpp"

namespace clothoid::io {

namespace {

constexpr const char* kColumns[] = {"s", "x_re", "y_re", "z_re", "x_im", "y_im", "z_im"};

std::vector<double> row_values(const CurveSample& sample) {
  const auto [re, im] = split_parts(sample.position);
  return {sample.s, re.x(), re.y(), re.z(), im.x(), im.y(), im.z()};
}

std::vector<std::size_t> part_columns(Part part) {
  switch (part) {
    case Part::real: return {0, 1, 2, 3};
    case Part::imag: return {0, 4, 5, 6};
    case Part::both: return {0, 1, 2, 3, 4, 5, 6};
  }
  return {};
}

double parse_number(const std::string& field) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(field.c_str(), &end);
  if (field.empty() || end != field.c_str() + field.size() || errno == ERANGE) {
    throw DomainError("malformed number in CSV: '" + field + "'");
  }
  return v;
}

std::vector<std::string> split_commas(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

Part part_from_string(std::string_view name) {
  if (name == "real") return Part::real;
  if (name == "imag") return Part::imag;
  if (name == "both") return Part::both;
  throw DomainError("part must be real, imag or both");
}

std::string_view to_string(Part part) {
  switch (part) {
    case Part::real: return "real";
    case Part::imag: return "imag";
    case Part::both: return "both";
  }
  return "both";
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_header(Part part) {
  std::string out;
  for (std::size_t col : part_columns(part)) {
    if (!out.empty()) out += ',';
    out += kColumns[col];
  }
  return out;
}

void write_csv(std::ostream& out, const Curve& curve, Part part) {
  const auto cols = part_columns(part);
  out << csv_header(part) << '\n';
  for (const auto& sample : curve.samples) {
    const auto values = row_values(sample);
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (i > 0) out << ',';
      out << format_number(values[cols[i]]);
    }
    out << '\n';
  }
}

void write_json(std::ostream& out, const Curve& curve, const JsonMeta& meta) {
  out << "{\"params\":{\"case\":" << static_cast<int>(curve.which)
      << ",\"k\":" << format_number(curve.params.k) << ",\"c\":" << format_number(curve.params.c)
      << ",\"delta\":" << format_number(curve.params.delta)
      << ",\"s_min\":" << format_number(meta.s_min) << ",\"s_max\":" << format_number(meta.s_max)
      << ",\"n_samples\":" << curve.samples.size() << ",\"origin\":\""
      << (meta.origin == Origin::zero_at_s0 ? "zero_at_s0" : "at_shift") << "\"},\"columns\":[";
  for (std::size_t i = 0; i < 7; ++i) out << (i ? "," : "") << '"' << kColumns[i] << '"';
  out << "],\"samples\":[";
  for (std::size_t r = 0; r < curve.samples.size(); ++r) {
    out << (r ? ",\n" : "\n") << '[';
    const auto values = row_values(curve.samples[r]);
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << format_number(values[i]);
    out << ']';
  }
  out << "\n]}\n";
}

Table read_csv(std::istream& in) {
  Table table;
  std::string line;
  if (!std::getline(in, line)) throw DomainError("empty CSV input");
  table.columns = split_commas(line);
  if (table.columns.empty() || table.columns.front() != "s") throw DomainError("CSV header must start with 's'");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split_commas(line);
    if (fields.size() != table.columns.size()) throw DomainError("CSV row has wrong field count");
    std::vector<double> row;
    row.reserve(fields.size());
    for (const auto& f : fields) row.push_back(parse_number(f));
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::vector<CurveSample> samples_from_table(const Table& table) {
  if (table.columns.size() != 7) throw DomainError("need all seven columns to rebuild samples");
  std::vector<CurveSample> out;
  out.reserve(table.rows.size());
  for (const auto& r : table.rows) {
    out.push_back({r[0], {cplx{r[1], r[4]}, cplx{r[2], r[5]}, cplx{r[3], r[6]}}});
  }
  return out;
}

}  // namespace clothoid::io
