#include <doctest.h>

#include <cmath>
#include <sstream>

#include "supertime/csv.hpp"
#include "supertime/errors.hpp"

using namespace supertime;

TEST_CASE("quoting") {
  CHECK(csv::quote("plain") == "plain");
  CHECK(csv::quote("a,b") == "\"a,b\"");
  CHECK(csv::quote("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv::quote("two\nlines") == "\"two\nlines\"");
  std::ostringstream out;
  csv::write_row(out, {"x", "1,2", ""});
  CHECK(out.str() == "x,\"1,2\",\r\n");
}

TEST_CASE("number formatting round-trips") {
  for (double v : {0.1, 1.0 / 3.0, 6.62607015e-34, 9.15e17, -2.5, 1e300}) {
    CHECK(std::stod(csv::format(v)) == v);
  }
  CHECK(csv::format(-0.0) == "0");
  CHECK(csv::format(1.0) == "1");
}

TEST_CASE("two-column reader") {
  std::istringstream ok("t,x\n0,0\n\n1e-3, 2.5e-6\r\n2e-3,0\n");
  const auto s = csv::read_two_column(ok);
  REQUIRE(s.size() == 3);
  CHECK(s[1].t == 1e-3);
  CHECK(s[1].y == 2.5e-6);

  auto error_of = [](const std::string& text) -> std::string {
    std::istringstream in(text);
    try {
      csv::read_two_column(in, "f.csv");
    } catch (const InvalidInput& e) {
      return e.what();
    }
    return "";
  };
  CHECK(error_of("").find("header") != std::string::npos);
  CHECK(error_of("0,1\n1,2\n").find("header") != std::string::npos);
  CHECK(error_of("t,x\n0,1\n1,oops\n").find("f.csv:3") != std::string::npos);
  CHECK(error_of("t,x\n0,1,2\n").find("f.csv:2") != std::string::npos);
  CHECK_THROWS_AS(csv::read_two_column(std::filesystem::path("/nonexistent/trajectory.csv")), InvalidInput);
}
