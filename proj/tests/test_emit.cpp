#include <doctest.h>

#include <clocale>

#include "sascone/emit.hpp"
#include "sascone/error.hpp"

using namespace sascone;
using namespace sascone::emit;
using cone::PositivityRange;

TEST_CASE("range text") {
  CHECK(range_text(PositivityRange::interval(Rational(1, 2), Rational(2))) == "1/2 < v1/v2 < 2");
  CHECK(range_text(PositivityRange::half_line(Rational(5))) == "5 < v1/v2");
  CHECK(range_text(PositivityRange::entire()) == "p+_w = t+_w (entire w-cone)");
  CHECK(range_text(PositivityRange::empty()) == "empty (all rays indefinite)");
}

TEST_CASE("doubles") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(-2.0) == "-2");
  CHECK(format_double(1e-300) == "1e-300");
  CHECK(format_double(1.0 / 3.0) == "0.33333333333333331");
  for (double x : {0.1, 1.0 / 3.0, -7.25e-12, 123456.789}) {
    CHECK(std::stod(format_double(x)) == x);
  }
}

TEST_CASE("json output is deterministic and sorted") {
  Json record;
  record["zeta"] = 1;
  record["alpha"] = Json{{"b", 0.25}, {"a", "1/2"}};
  record["mid"] = Json::array({1, 2});
  const std::string first = to_json_text(record);
  CHECK(first == to_json_text(record));
  CHECK(first.find("\"alpha\"") < first.find("\"mid\""));
  CHECK(first.find("\"mid\"") < first.find("\"zeta\""));
  CHECK(first.find("\"a\": \"1/2\"") < first.find("\"b\": 0.25"));
  CHECK(first.back() == '\n');
  CHECK(Json::parse(first) == record);
}

TEST_CASE("text and csv") {
  Json record{{"b", Json{{"x", 1}}}, {"a", true}};
  CHECK(to_text(record) == "a: true\nb.x: 1\n");
  CHECK(to_csv({"z", "F"}, {{-1.0, 0.0}, {0.5, 0.25}}) == "z,F\n-1,0\n0.5,0.25\n");
  CHECK(parse_format("csv") == Format::Csv);
  CHECK_THROWS_AS(parse_format("xml"), Error);
}

TEST_CASE("output ignores the global locale") {
  const char* previous = std::setlocale(LC_NUMERIC, nullptr);
  const std::string saved = previous ? previous : "C";
  if (std::setlocale(LC_NUMERIC, "de_DE.UTF-8") != nullptr) {
    CHECK(format_double(0.5) == "0.5");
    CHECK(to_csv({"z"}, {{1.5}}) == "z\n1.5\n");
  }
  std::setlocale(LC_NUMERIC, saved.c_str());
}
