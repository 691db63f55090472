#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <cstring>
#include <sstream>

#include "clothoid/curve.hpp"
#include "clothoid/errors.hpp"
#include "clothoid/io.hpp"

using namespace clothoid;

namespace {

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

Curve demo() { return sample_curve(FCase::two, HelixParams{2, 0.7, 0}, -3.0, 3.0, 57); }

}  // namespace

TEST_CASE("part names") {
  CHECK(io::part_from_string("real") == io::Part::real);
  CHECK(io::part_from_string("imag") == io::Part::imag);
  CHECK(io::part_from_string("both") == io::Part::both);
  CHECK(io::to_string(io::Part::imag) == "imag");
  CHECK_THROWS_AS(io::part_from_string("all"), DomainError);
}

TEST_CASE("headers follow the requested part") {
  CHECK(io::csv_header(io::Part::both) == "s,x_re,y_re,z_re,x_im,y_im,z_im");
  CHECK(io::csv_header(io::Part::real) == "s,x_re,y_re,z_re");
  CHECK(io::csv_header(io::Part::imag) == "s,x_im,y_im,z_im");
}

TEST_CASE("number formatting round-trips") {
  for (double v : {0.1, -0.0, 1.0 / 3.0, 5e-324, 1.7976931348623157e308, -2.5}) {
    CHECK(same_bits(std::strtod(io::format_number(v).c_str(), nullptr), v));
  }
  CHECK(io::format_number(0.5) == "0.5");
}

TEST_CASE("CSV round trip is bit-exact") {
  const Curve curve = demo();
  std::stringstream buf;
  io::write_csv(buf, curve, io::Part::both);
  const auto table = io::read_csv(buf);
  CHECK(table.columns.size() == 7);
  REQUIRE(table.rows.size() == curve.samples.size());
  const auto back = io::samples_from_table(table);
  for (std::size_t i = 0; i < back.size(); ++i) {
    const auto& a = curve.samples[i];
    const auto& b = back[i];
    CHECK(same_bits(a.s, b.s));
    CHECK(same_bits(a.position.x.real(), b.position.x.real()));
    CHECK(same_bits(a.position.y.real(), b.position.y.real()));
    CHECK(same_bits(a.position.z.real(), b.position.z.real()));
    CHECK(same_bits(a.position.x.imag(), b.position.x.imag()));
    CHECK(same_bits(a.position.y.imag(), b.position.y.imag()));
    CHECK(same_bits(a.position.z.imag(), b.position.z.imag()));
  }
}

TEST_CASE("partial CSV keeps the chosen columns") {
  const Curve curve = demo();
  std::stringstream buf;
  io::write_csv(buf, curve, io::Part::imag);
  const auto table = io::read_csv(buf);
  CHECK(table.columns == std::vector<std::string>{"s", "x_im", "y_im", "z_im"});
  CHECK(table.rows[3][1] == curve.samples[3].position.x.imag());
  CHECK_THROWS_AS(io::samples_from_table(table), DomainError);
}

TEST_CASE("malformed CSV is rejected") {
  std::stringstream empty;
  CHECK_THROWS_AS(io::read_csv(empty), DomainError);
  std::stringstream bad_header("t,x\n1,2\n");
  CHECK_THROWS_AS(io::read_csv(bad_header), DomainError);
  std::stringstream short_row("s,x_re\n1\n");
  CHECK_THROWS_AS(io::read_csv(short_row), DomainError);
  std::stringstream bad_number("s,x_re\n1,abc\n");
  CHECK_THROWS_AS(io::read_csv(bad_number), DomainError);
}

TEST_CASE("JSON output parses and carries the parameters") {
  const Curve curve = demo();
  std::stringstream buf;
  io::write_json(buf, curve, io::JsonMeta{-3.0, 3.0, Origin::zero_at_s0});
  const auto doc = nlohmann::json::parse(buf.str());
  CHECK(doc["params"]["case"] == 2);
  CHECK(doc["params"]["k"] == 2.0);
  CHECK(doc["params"]["c"] == 0.7);
  CHECK(doc["params"]["n_samples"] == 57);
  CHECK(doc["params"]["origin"] == "zero_at_s0");
  CHECK(doc["columns"].size() == 7);
  REQUIRE(doc["samples"].size() == 57);
  for (std::size_t i = 0; i < 57; ++i) {
    const auto& row = doc["samples"][i];
    REQUIRE(row.size() == 7);
    CHECK(same_bits(row[0].get<double>(), curve.samples[i].s));
    CHECK(same_bits(row[2].get<double>(), curve.samples[i].position.y.real()));
    CHECK(same_bits(row[4].get<double>(), curve.samples[i].position.x.imag()));
  }
}
