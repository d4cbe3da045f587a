#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "hffr/closed_access.hpp"
#include "hffr/montecarlo.hpp"

namespace hffr::report {

// All numeric CSV output goes through this: 9 significant digits, shortest
// representation ("%.9g"), so files are byte-stable across runs.
std::string format_double(double v);

void write_analytic_csv(std::ostream& os, const closed::CcdfCurve& curve);
void write_simulated_csv(std::ostream& os, const mc::EmpiricalCcdf& emp);
void write_compare_csv(std::ostream& os, const closed::CcdfCurve& curve,
                       const mc::EmpiricalCcdf& emp,
                       const mc::CompareReport& cmp);

struct SweepRow {
  double param_value = 0.0;
  double t_db = 0.0;
  double coverage = 0.0;
};
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

struct RateRow {
  std::string scheme;
  std::string access;
  double nats = 0.0;
  double bits = 0.0;
};
void write_rate_csv(std::ostream& os, const std::vector<RateRow>& rows);

// A named curve parsed back from one of the CSV formats above (first column
// T_dB, second column the value).
struct PlotSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};
PlotSeries read_csv_series(const std::string& path);

// Standalone SVG, no external references: axes, ticks, legend, one polyline
// per series.
void write_svg_plot(std::ostream& os, const std::vector<PlotSeries>& series,
                    const std::string& x_label, const std::string& y_label);

}  // namespace hffr::report
