#include "hffr/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "hffr/errors.hpp"

using namespace hffr;
using report::format_double;

namespace {

std::string temp_csv(const std::string& name, const std::string& content) {
  const auto path =
      (std::filesystem::temp_directory_path() / name).string();
  std::ofstream out(path, std::ios::binary);
  out << content;
  out.close();
  return path;
}

closed::CcdfCurve tiny_curve() {
  closed::CcdfCurve curve;
  curve.grid = ThresholdGrid{0.0, 1.0, 1.0};
  curve.values = {0.5, 0.25};
  curve.warnings = {"", "quadrature_nonconverged"};
  return curve;
}

mc::EmpiricalCcdf tiny_empirical() {
  mc::EmpiricalCcdf emp;
  emp.grid = ThresholdGrid{0.0, 1.0, 1.0};
  emp.values = {0.52, 0.26};
  emp.stderrs = {0.01, 0.0125};
  emp.n_conditioned = 1000;
  emp.n_total = 1600;
  return emp;
}

}  // namespace

TEST_CASE("format_double gives shortest 9-significant-digit text") {
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(-2.5) == "-2.5");
  CHECK(format_double(0.0001) == "0.0001");
  CHECK(format_double(1.0 / 3.0) == "0.333333333");
  CHECK(format_double(0.736277002798) == "0.736277003");
  CHECK(format_double(123456789.0) == "123456789");
  CHECK(format_double(1e10) == "1e+10");
  CHECK(format_double(2.5e-7) == "2.5e-07");
}

TEST_CASE("analytic CSV layout") {
  std::ostringstream os;
  report::write_analytic_csv(os, tiny_curve());
  CHECK(os.str() ==
        "T_dB,coverage,warning\n"
        "0,0.5,\n"
        "1,0.25,quadrature_nonconverged\n");
}

TEST_CASE("simulated CSV layout") {
  std::ostringstream os;
  report::write_simulated_csv(os, tiny_empirical());
  CHECK(os.str() ==
        "T_dB,coverage,stderr,n_conditioned\n"
        "0,0.52,0.01,1000\n"
        "1,0.26,0.0125,1000\n");
}

TEST_CASE("compare CSV layout") {
  mc::CompareReport cmp;
  cmp.abs_diff = {0.02, 0.01};
  cmp.z_score = {2.0, 0.8};
  std::ostringstream os;
  report::write_compare_csv(os, tiny_curve(), tiny_empirical(), cmp);
  CHECK(os.str() ==
        "T_dB,coverage,warning,coverage_mc,stderr,n_conditioned,abs_diff,z_score\n"
        "0,0.5,,0.52,0.01,1000,0.02,2\n"
        "1,0.25,quadrature_nonconverged,0.26,0.0125,1000,0.01,0.8\n");
}

TEST_CASE("sweep CSV layout") {
  std::ostringstream os;
  report::write_sweep_csv(os, {{2.0, -10.0, 0.9}, {2.0, 0.0, 0.5}});
  CHECK(os.str() ==
        "param_value,T_dB,coverage\n"
        "2,-10,0.9\n"
        "2,0,0.5\n");
}

TEST_CASE("rate CSV layout") {
  std::ostringstream os;
  report::write_rate_csv(os, {{"strict_ffr", "closed", 0.693147181, 1.0},
                              {"sfr", "open", 1.5, 2.16404256}});
  CHECK(os.str() ==
        "scheme,access,rate_nats,rate_bits\n"
        "strict_ffr,closed,0.693147181,1\n"
        "sfr,open,1.5,2.16404256\n");
}

TEST_CASE("CSV series round-trips through a file") {
  const auto path = temp_csv("hffr_series_roundtrip.csv",
                             "T_dB,coverage,warning\n"
                             "-10,0.96,\n"
                             "0,0.74,\n"
                             "10,0.31,\n");
  const auto series = report::read_csv_series(path);
  CHECK(series.label == "hffr_series_roundtrip");
  REQUIRE(series.x.size() == 3);
  CHECK(series.x[0] == doctest::Approx(-10.0));
  CHECK(series.x[2] == doctest::Approx(10.0));
  CHECK(series.y[1] == doctest::Approx(0.74));
  std::remove(path.c_str());
}

TEST_CASE("CSV series tolerates CRLF endings and extra columns") {
  const auto path = temp_csv("hffr_series_crlf.csv",
                             "T_dB,coverage,stderr,n_conditioned\r\n"
                             "0,0.5,0.01,100\r\n"
                             "1,0.4,0.01,100\r\n");
  const auto series = report::read_csv_series(path);
  REQUIRE(series.x.size() == 2);
  CHECK(series.y[0] == doctest::Approx(0.5));
  CHECK(series.y[1] == doctest::Approx(0.4));
  std::remove(path.c_str());
}

TEST_CASE("CSV series rejects malformed inputs") {
  CHECK_THROWS_AS(report::read_csv_series("/nonexistent/file.csv"), Error);

  const auto bad_header = temp_csv("hffr_series_badheader.csv",
                                   "threshold,coverage\n0,0.5\n");
  CHECK_THROWS_AS(report::read_csv_series(bad_header), Error);
  std::remove(bad_header.c_str());

  const auto no_rows = temp_csv("hffr_series_norows.csv", "T_dB,coverage\n");
  CHECK_THROWS_AS(report::read_csv_series(no_rows), Error);
  std::remove(no_rows.c_str());

  const auto bad_field = temp_csv("hffr_series_badfield.csv",
                                  "T_dB,coverage\n0,not_a_number\n");
  try {
    report::read_csv_series(bad_field);
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::invalid_argument);
    CHECK(std::string(e.what()).find("not_a_number") != std::string::npos);
  }
  std::remove(bad_field.c_str());
}

TEST_CASE("SVG plot is standalone and draws every series") {
  report::PlotSeries a{"strict", {-10.0, 0.0, 10.0}, {0.96, 0.74, 0.31}};
  report::PlotSeries b{"sfr", {-10.0, 0.0, 10.0}, {0.72, 0.34, 0.07}};
  std::ostringstream os;
  report::write_svg_plot(os, {a, b}, "SINR threshold (dB)",
                         "Coverage probability");
  const std::string svg = os.str();

  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("width='720'") != std::string::npos);
  CHECK(svg.find("height='480'") != std::string::npos);
  CHECK(svg.find("SINR threshold (dB)") != std::string::npos);
  CHECK(svg.find("Coverage probability") != std::string::npos);
  CHECK(svg.find(">strict<") != std::string::npos);
  CHECK(svg.find(">sfr<") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);

  std::size_t polylines = 0;
  for (auto pos = svg.find("<polyline"); pos != std::string::npos;
       pos = svg.find("<polyline", pos + 1))
    ++polylines;
  CHECK(polylines == 2);
}

TEST_CASE("SVG plot handles a degenerate flat series") {
  report::PlotSeries flat{"flat", {0.0, 1.0}, {0.5, 0.5}};
  std::ostringstream os;
  report::write_svg_plot(os, {flat}, "x", "y");
  CHECK(os.str().find("<polyline") != std::string::npos);
  CHECK_THROWS_AS(report::write_svg_plot(os, {}, "x", "y"), Error);
}
