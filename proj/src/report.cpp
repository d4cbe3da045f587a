#include "hffr/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "hffr/errors.hpp"

namespace hffr::report {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

void write_analytic_csv(std::ostream& os, const closed::CcdfCurve& curve) {
  os << "T_dB,coverage,warning\n";
  for (std::size_t i = 0; i < curve.values.size(); ++i)
    os << format_double(curve.grid.at_db(i)) << ','
       << format_double(curve.values[i]) << ','
       << (i < curve.warnings.size() ? curve.warnings[i] : std::string()) << '\n';
}

void write_simulated_csv(std::ostream& os, const mc::EmpiricalCcdf& emp) {
  os << "T_dB,coverage,stderr,n_conditioned\n";
  for (std::size_t i = 0; i < emp.values.size(); ++i)
    os << format_double(emp.grid.at_db(i)) << ','
       << format_double(emp.values[i]) << ','
       << format_double(emp.stderrs[i]) << ',' << emp.n_conditioned << '\n';
}

void write_compare_csv(std::ostream& os, const closed::CcdfCurve& curve,
                       const mc::EmpiricalCcdf& emp,
                       const mc::CompareReport& cmp) {
  os << "T_dB,coverage,warning,coverage_mc,stderr,n_conditioned,abs_diff,z_score\n";
  for (std::size_t i = 0; i < curve.values.size(); ++i)
    os << format_double(curve.grid.at_db(i)) << ','
       << format_double(curve.values[i]) << ','
       << (i < curve.warnings.size() ? curve.warnings[i] : std::string()) << ','
       << format_double(emp.values[i]) << ',' << format_double(emp.stderrs[i])
       << ',' << emp.n_conditioned << ',' << format_double(cmp.abs_diff[i])
       << ',' << format_double(cmp.z_score[i]) << '\n';
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "param_value,T_dB,coverage\n";
  for (const auto& r : rows)
    os << format_double(r.param_value) << ',' << format_double(r.t_db) << ','
       << format_double(r.coverage) << '\n';
}

void write_rate_csv(std::ostream& os, const std::vector<RateRow>& rows) {
  os << "scheme,access,rate_nats,rate_bits\n";
  for (const auto& r : rows)
    os << r.scheme << ',' << r.access << ',' << format_double(r.nats) << ','
       << format_double(r.bits) << '\n';
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (const char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

double parse_field(const std::string& s, const std::string& path, int lineno) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (...) {
  }
  fail(errc::invalid_argument, path + ":" + std::to_string(lineno) +
                                   ": cannot parse '" + s + "' as a number");
}

std::string axis_ticks(double lo, double hi, int n, bool vertical, double px0,
                       double px1, double fixed) {
  std::ostringstream os;
  for (int i = 0; i <= n; ++i) {
    const double f = static_cast<double>(i) / n;
    const double value = lo + f * (hi - lo);
    const double p = px0 + f * (px1 - px0);
    if (vertical) {
      os << "<line x1='" << fixed - 5 << "' y1='" << p << "' x2='" << fixed
         << "' y2='" << p << "' stroke='black'/>\n";
      os << "<text x='" << fixed - 8 << "' y='" << p + 4
         << "' text-anchor='end' font-size='11'>" << format_double(value)
         << "</text>\n";
    } else {
      os << "<line x1='" << p << "' y1='" << fixed << "' x2='" << p << "' y2='"
         << fixed + 5 << "' stroke='black'/>\n";
      os << "<text x='" << p << "' y='" << fixed + 18
         << "' text-anchor='middle' font-size='11'>" << format_double(value)
         << "</text>\n";
    }
  }
  return os.str();
}

}  // namespace

PlotSeries read_csv_series(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::invalid_argument, "cannot open CSV file '" + path + "'");
  PlotSeries series;
  // Label = file stem, the most useful legend text we can derive.
  std::string stem = path;
  if (const auto slash = stem.find_last_of("/\\"); slash != std::string::npos)
    stem = stem.substr(slash + 1);
  if (const auto dot = stem.find_last_of('.'); dot != std::string::npos)
    stem = stem.substr(0, dot);
  series.label = stem;

  std::string line;
  int lineno = 0;
  bool header = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (header) {
      if (fields.size() < 2 || fields[0] != "T_dB")
        fail(errc::invalid_argument,
             path + ": expected a CSV with a T_dB first column");
      header = false;
      continue;
    }
    if (fields.size() < 2)
      fail(errc::invalid_argument,
           path + ":" + std::to_string(lineno) + ": expected at least 2 columns");
    series.x.push_back(parse_field(fields[0], path, lineno));
    series.y.push_back(parse_field(fields[1], path, lineno));
  }
  if (series.x.empty())
    fail(errc::invalid_argument, path + ": no data rows");
  return series;
}

void write_svg_plot(std::ostream& os, const std::vector<PlotSeries>& series,
                    const std::string& x_label, const std::string& y_label) {
  if (series.empty()) fail(errc::invalid_argument, "plot needs at least one series");
  double xmin = series[0].x[0], xmax = xmin, ymin = series[0].y[0], ymax = ymin;
  for (const auto& s : series) {
    for (const double v : s.x) {
      xmin = std::min(xmin, v);
      xmax = std::max(xmax, v);
    }
    for (const double v : s.y) {
      ymin = std::min(ymin, v);
      ymax = std::max(ymax, v);
    }
  }
  if (xmax == xmin) xmax = xmin + 1.0;
  if (ymax == ymin) ymax = ymin + 1.0;

  constexpr int kW = 720, kH = 480;
  constexpr double kL = 70, kR = 690, kT = 30, kB = 430;
  const auto px = [&](double x) { return kL + (x - xmin) / (xmax - xmin) * (kR - kL); };
  const auto py = [&](double y) { return kB - (y - ymin) / (ymax - ymin) * (kB - kT); };
  static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c",
                                  "#9467bd", "#ff7f0e", "#8c564b"};

  os << "<?xml version='1.0' encoding='UTF-8'?>\n"
     << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kW << "' height='"
     << kH << "' viewBox='0 0 " << kW << ' ' << kH << "'>\n"
     << "<rect width='" << kW << "' height='" << kH << "' fill='white'/>\n"
     << "<line x1='" << kL << "' y1='" << kB << "' x2='" << kR << "' y2='" << kB
     << "' stroke='black'/>\n"
     << "<line x1='" << kL << "' y1='" << kT << "' x2='" << kL << "' y2='" << kB
     << "' stroke='black'/>\n";
  os << axis_ticks(xmin, xmax, 6, false, kL, kR, kB);
  os << axis_ticks(ymin, ymax, 5, true, kB, kT, kL);
  os << "<text x='" << (kL + kR) / 2 << "' y='" << kH - 12
     << "' text-anchor='middle' font-size='13'>" << x_label << "</text>\n";
  os << "<text x='16' y='" << (kT + kB) / 2
     << "' text-anchor='middle' font-size='13' transform='rotate(-90 16 "
     << (kT + kB) / 2 << ")'>" << y_label << "</text>\n";

  for (std::size_t si = 0; si < series.size(); ++si) {
    const auto& s = series[si];
    os << "<polyline fill='none' stroke='" << kColors[si % 6]
       << "' stroke-width='1.5' points='";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (i) os << ' ';
      os << format_double(px(s.x[i])) << ',' << format_double(py(s.y[i]));
    }
    os << "'/>\n";
    const double ly = kT + 16.0 * static_cast<double>(si);
    os << "<line x1='" << kR - 150 << "' y1='" << ly << "' x2='" << kR - 120
       << "' y2='" << ly << "' stroke='" << kColors[si % 6]
       << "' stroke-width='1.5'/>\n"
       << "<text x='" << kR - 114 << "' y='" << ly + 4 << "' font-size='11'>"
       << s.label << "</text>\n";
  }
  os << "</svg>\n";
}

}  // namespace hffr::report
