#include <doctest.h>

#include <algorithm>

#include "dol/csv.hpp"
#include "dol/svg.hpp"

using namespace dol;

TEST_CASE("scientific formatting has 12 significant digits") {
  CHECK(csv::format_sci(1.0) == "1.00000000000e+00");
  CHECK(csv::format_sci(0.0) == "0.00000000000e+00");
  CHECK(csv::format_sci(-0.5) == "-5.00000000000e-01");
  CHECK(csv::format_sci(1.23456789012345e-7) == "1.23456789012e-07");
}

TEST_CASE("csv table layout") {
  const std::string out = csv::table({"a", "b"}, {{"1", "2"}, {"3", "4"}});
  CHECK(out == "a,b\n1,2\n3,4\n");
  CHECK(out.find("\r") == std::string::npos);  // LF endings only
}

TEST_CASE("svg chart structure") {
  std::vector<svg::Series> series(3);
  series[0] = {"phi(n)", {0.0, 1.0, 2.0}};
  series[1] = {"phi(n+1)", {1.0, 2.0, 3.0}};
  series[2] = {"E(n)", {0.5, 1.5, 2.5}};
  const std::string chart = svg::line_chart(series, "test", "n");
  CHECK(chart.find("viewBox=\"0 0 800 600\"") != std::string::npos);
  CHECK(std::count(chart.begin(), chart.end(), '\n') > 10);
  size_t polylines = 0;
  for (size_t pos = 0; (pos = chart.find("<polyline", pos)) != std::string::npos; ++pos)
    ++polylines;
  CHECK(polylines == 3);
  for (const auto& s : series) CHECK(chart.find(s.label) != std::string::npos);
  CHECK(chart == svg::line_chart(series, "test", "n"));  // deterministic
}
