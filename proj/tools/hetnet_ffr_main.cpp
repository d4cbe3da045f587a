// hetnet-ffr: coverage and rate curves for FFR multi-tier downlinks.
// Subcommands: analyze, simulate, compare, sweep, rate, plot.
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hffr/closed_access.hpp"
#include "hffr/errors.hpp"
#include "hffr/montecarlo.hpp"
#include "hffr/open_access.hpp"
#include "hffr/rate.hpp"
#include "hffr/report.hpp"
#include "hffr/scenario.hpp"

namespace {

using hffr::AccessMode;
using hffr::Error;
using hffr::ReuseScheme;
using hffr::errc;
namespace report = hffr::report;
namespace scn = hffr::scenario;

constexpr int kExitError = 1;
constexpr int kExitSchema = 2;
constexpr int kExitConditioning = 3;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case errc::schema:
      return kExitSchema;
    case errc::degenerate_conditioning:
    case errc::insufficient_conditioning:
      return kExitConditioning;
    default:
      return kExitError;
  }
}

// All commands write their primary artifact to --out, or stdout when absent.
struct OutStream {
  explicit OutStream(const std::string& path) {
    if (!path.empty()) {
      file = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file) hffr::fail(errc::invalid_argument, "cannot open output file '" + path + "'");
    }
  }
  std::ostream& get() { return file ? *file : std::cout; }
  std::unique_ptr<std::ofstream> file;
};

hffr::closed::CcdfCurve analytic_curve(const scn::Scenario& sc) {
  if (sc.access == AccessMode::closed)
    return hffr::closed::ccdf_curve(sc.scheme, sc.net, sc.grid);
  return hffr::open::ccdf_curve(sc.scheme, *sc.open_scen, sc.grid);
}

hffr::mc::EmpiricalCcdf simulated_curve(const scn::Scenario& sc) {
  if (sc.access == AccessMode::closed)
    return hffr::mc::simulate_closed(sc.scheme, sc.net, sc.grid, sc.mc);
  return hffr::mc::simulate_open(sc.scheme, *sc.open_scen, sc.grid, sc.mc);
}

int warn_nonconvergence(const hffr::closed::CcdfCurve& curve) {
  std::size_t n = 0;
  for (const auto& w : curve.warnings)
    if (!w.empty()) ++n;
  if (n > 0)
    std::cerr << "warning: " << n
              << " grid point(s) did not converge to tolerance; values are "
                 "best estimates (see the warning column)\n";
  return 0;
}

int cmd_analyze(const std::string& scenario_path, const std::string& out_path) {
  const auto sc = scn::load_scenario_file(scenario_path);
  const auto curve = analytic_curve(sc);
  OutStream out(out_path);
  report::write_analytic_csv(out.get(), curve);
  return warn_nonconvergence(curve);
}

int cmd_simulate(const std::string& scenario_path, const std::string& out_path) {
  const auto sc = scn::load_scenario_file(scenario_path);
  const auto emp = simulated_curve(sc);
  OutStream out(out_path);
  report::write_simulated_csv(out.get(), emp);
  return 0;
}

int cmd_compare(const std::string& scenario_path, const std::string& out_path,
                double gate) {
  const auto sc = scn::load_scenario_file(scenario_path);
  const auto curve = analytic_curve(sc);
  const auto emp = simulated_curve(sc);
  const auto cmp = hffr::mc::compare_curves(curve, emp);
  OutStream out(out_path);
  report::write_compare_csv(out.get(), curve, emp, cmp);
  warn_nonconvergence(curve);
  std::cerr << "compare: max |analytic - simulated| = "
            << report::format_double(cmp.max_abs_diff) << " (gate "
            << report::format_double(gate) << "), "
            << report::format_double(100.0 * cmp.frac_within_3sigma)
            << "% of points within 3 sigma\n";
  if (!(cmp.max_abs_diff <= gate)) {
    std::cerr << "compare: FAILED the gate\n";
    return kExitError;
  }
  return 0;
}

int cmd_sweep(const std::string& scenario_path, const std::string& out_path,
              const std::string& param_name, const std::vector<double>& values) {
  if (values.empty())
    hffr::fail(errc::invalid_argument, "sweep needs at least one --values entry");
  const auto base = scn::load_scenario_file(scenario_path);
  const auto param = scn::parse_sweep_param(param_name);
  std::vector<report::SweepRow> rows;
  bool any_warning = false;
  for (const double v : values) {
    const auto sc = scn::apply_sweep_value(base, param, v);
    const auto curve = analytic_curve(sc);
    for (const auto& w : curve.warnings)
      if (!w.empty()) any_warning = true;
    for (std::size_t i = 0; i < curve.values.size(); ++i)
      rows.push_back({v, curve.grid.at_db(i), curve.values[i]});
  }
  OutStream out(out_path);
  report::write_sweep_csv(out.get(), rows);
  if (any_warning)
    std::cerr << "warning: some sweep points did not converge to tolerance; "
                 "values are best estimates\n";
  return 0;
}

int cmd_rate(const std::string& scenario_path, const std::string& out_path) {
  const auto sc = scn::load_scenario_file(scenario_path);
  const auto res = sc.access == AccessMode::closed
                       ? hffr::rate::average_edge_rate(sc.scheme, sc.net)
                       : hffr::rate::average_edge_rate(sc.scheme, *sc.open_scen);
  OutStream out(out_path);
  report::write_rate_csv(out.get(),
                         {{scn::scheme_name(sc.scheme), scn::access_name(sc.access),
                           res.nats, res.bits()}});
  for (const auto& w : res.warnings) std::cerr << "warning: " << w << '\n';
  return 0;
}

int cmd_plot(const std::vector<std::string>& csv_paths, const std::string& out_path) {
  std::vector<report::PlotSeries> series;
  series.reserve(csv_paths.size());
  for (const auto& p : csv_paths) series.push_back(report::read_csv_series(p));
  OutStream out(out_path);
  report::write_svg_plot(out.get(), series, "SINR threshold (dB)",
                         "Coverage probability");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coverage probability and average rate for multi-tier cellular "
               "downlinks under fractional frequency reuse"};
  app.require_subcommand(1);

  std::string scenario_path, out_path, param_name;
  std::vector<double> values;
  std::vector<std::string> csv_paths;
  double gate = 0.015;

  auto add_common = [&](CLI::App* cmd, bool needs_scenario = true) {
    if (needs_scenario)
      cmd->add_option("--scenario", scenario_path, "Scenario JSON file")
          ->required();
    cmd->add_option("--out", out_path, "Output file (default: stdout)");
  };

  auto* analyze = app.add_subcommand("analyze", "Evaluate the analytic coverage curve");
  add_common(analyze);
  auto* simulate = app.add_subcommand("simulate", "Estimate the coverage curve by simulation");
  add_common(simulate);
  auto* compare = app.add_subcommand("compare", "Analytic vs simulated curve with a pass/fail gate");
  add_common(compare);
  compare->add_option("--gate", gate, "Max |analytic - simulated| accepted (default 0.015)");
  auto* sweep = app.add_subcommand("sweep", "Analytic curves across a parameter sweep");
  add_common(sweep);
  sweep->add_option("--param", param_name,
                    "Swept parameter: kappa_k, t2_db, beta_db, delta, t_bias_db")
      ->required();
  sweep->add_option("--values", values, "Sweep values (comma separated)")
      ->required()
      ->delimiter(',');
  auto* rate = app.add_subcommand("rate", "Average edge-user rate");
  add_common(rate);
  auto* plot = app.add_subcommand("plot", "Render coverage CSVs as an SVG plot");
  plot->add_option("csv", csv_paths, "Input CSV files")->required();
  add_common(plot, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitSchema;  // bad usage reported like any malformed input
  }

  try {
    if (app.got_subcommand(analyze)) return cmd_analyze(scenario_path, out_path);
    if (app.got_subcommand(simulate)) return cmd_simulate(scenario_path, out_path);
    if (app.got_subcommand(compare)) return cmd_compare(scenario_path, out_path, gate);
    if (app.got_subcommand(sweep)) return cmd_sweep(scenario_path, out_path, param_name, values);
    if (app.got_subcommand(rate)) return cmd_rate(scenario_path, out_path);
    if (app.got_subcommand(plot)) return cmd_plot(csv_paths, out_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
