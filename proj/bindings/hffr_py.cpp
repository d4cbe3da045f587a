// Python bindings for the analytic and simulation entry points.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hffr/closed_access.hpp"
#include "hffr/discrepancy.hpp"
#include "hffr/errors.hpp"
#include "hffr/kernels.hpp"
#include "hffr/model.hpp"
#include "hffr/montecarlo.hpp"
#include "hffr/open_access.hpp"
#include "hffr/rate.hpp"
#include "hffr/scenario.hpp"

namespace py = pybind11;
using namespace hffr;

namespace {

ReuseScheme scheme_from_name(const std::string& name) {
  if (name == "universal") return ReuseScheme::universal;
  if (name == "strict_ffr") return ReuseScheme::strict_ffr;
  if (name == "sfr") return ReuseScheme::sfr;
  fail(errc::invalid_argument, "unknown scheme '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_hetnet_ffr, m) {
  m.doc() = "Edge-user coverage and rate for FFR multi-tier cellular downlinks";

  py::register_exception<Error>(m, "HffrError");

  py::class_<TierConfig>(m, "TierConfig")
      .def(py::init<>())
      .def(py::init([](double density, double power, double ffr_threshold) {
             return TierConfig{density, power, ffr_threshold};
           }),
           py::arg("density"), py::arg("power"), py::arg("ffr_threshold") = 1.0)
      .def_readwrite("density", &TierConfig::density)
      .def_readwrite("power", &TierConfig::power)
      .def_readwrite("ffr_threshold", &TierConfig::ffr_threshold);

  py::class_<NetworkConfig>(m, "NetworkConfig")
      .def(py::init<>())
      .def_readwrite("tiers", &NetworkConfig::tiers)
      .def_readwrite("alpha", &NetworkConfig::alpha)
      .def_readwrite("sigma2", &NetworkConfig::sigma2)
      .def_readwrite("mu", &NetworkConfig::mu)
      .def_readwrite("delta", &NetworkConfig::delta)
      .def_readwrite("beta", &NetworkConfig::beta)
      .def("validate", &NetworkConfig::validate);

  py::class_<ThresholdGrid>(m, "ThresholdGrid")
      .def(py::init([](double start_db, double stop_db, double step_db) {
             return ThresholdGrid{start_db, stop_db, step_db};
           }),
           py::arg("start_db"), py::arg("stop_db"), py::arg("step_db"))
      .def_readwrite("start_db", &ThresholdGrid::start_db)
      .def_readwrite("stop_db", &ThresholdGrid::stop_db)
      .def_readwrite("step_db", &ThresholdGrid::step_db)
      .def("__len__", &ThresholdGrid::size)
      .def("at_db", &ThresholdGrid::at_db)
      .def("at_linear", &ThresholdGrid::at_linear);

  py::class_<open::OpenScenario>(m, "OpenScenario")
      .def(py::init<>())
      .def_readwrite("net", &open::OpenScenario::net)
      .def_readwrite("t1", &open::OpenScenario::t1)
      .def_readwrite("t2", &open::OpenScenario::t2)
      .def("validate", &open::OpenScenario::validate);

  py::class_<closed::CcdfCurve>(m, "CcdfCurve")
      .def_readonly("grid", &closed::CcdfCurve::grid)
      .def_readonly("values", &closed::CcdfCurve::values)
      .def_readonly("warnings", &closed::CcdfCurve::warnings);

  py::class_<mc::McConfig>(m, "McConfig")
      .def(py::init<>())
      .def_readwrite("drops", &mc::McConfig::drops)
      .def_readwrite("max_attempts", &mc::McConfig::max_attempts)
      .def_readwrite("seed", &mc::McConfig::seed)
      .def_readwrite("batch", &mc::McConfig::batch)
      .def_readwrite("region_radius", &mc::McConfig::region_radius)
      .def_readwrite("threads", &mc::McConfig::threads);

  py::class_<mc::EmpiricalCcdf>(m, "EmpiricalCcdf")
      .def_readonly("grid", &mc::EmpiricalCcdf::grid)
      .def_readonly("values", &mc::EmpiricalCcdf::values)
      .def_readonly("stderrs", &mc::EmpiricalCcdf::stderrs)
      .def_readonly("n_conditioned", &mc::EmpiricalCcdf::n_conditioned)
      .def_readonly("n_total", &mc::EmpiricalCcdf::n_total);

  m.def("db_to_linear", &db_to_linear, py::arg("db"));
  m.def("linear_to_db", &linear_to_db, py::arg("linear"));
  m.def("eta", &eta, py::arg("beta"), py::arg("delta"));

  m.def("rho", [](double z, double alpha) { return kernels::rho(z, alpha, {}); },
        py::arg("z"), py::arg("alpha"),
        "Normalized interference kernel of the nearest-point exclusion field");
  m.def("psi", [](double z, double alpha) { return kernels::psi(z, alpha); },
        py::arg("z"), py::arg("alpha"));

  m.def("strict_ffr_edge_ccdf",
        [](double t, const NetworkConfig& net) {
          return closed::strict_ffr_edge_ccdf(t, net, {});
        },
        py::arg("t"), py::arg("net"));
  m.def("sfr_edge_ccdf",
        [](double t, const NetworkConfig& net) {
          return closed::sfr_edge_ccdf(t, net, {});
        },
        py::arg("t"), py::arg("net"));
  m.def("universal_edge_ccdf",
        [](double t, const NetworkConfig& net) {
          return closed::universal_edge_ccdf(t, net, {});
        },
        py::arg("t"), py::arg("net"));

  m.def("ccdf_curve",
        [](const std::string& scheme, const NetworkConfig& net,
           const ThresholdGrid& grid) {
          return closed::ccdf_curve(scheme_from_name(scheme), net, grid, {});
        },
        py::arg("scheme"), py::arg("net"), py::arg("grid"));
  m.def("open_ccdf_curve",
        [](const std::string& scheme, const open::OpenScenario& scen,
           const ThresholdGrid& grid) {
          return open::ccdf_curve(scheme_from_name(scheme), scen, grid, {});
        },
        py::arg("scheme"), py::arg("scen"), py::arg("grid"));

  m.def("average_edge_rate",
        [](const std::string& scheme, const NetworkConfig& net) {
          const auto r = rate::average_edge_rate(scheme_from_name(scheme), net, {});
          return py::make_tuple(r.nats, r.bits());
        },
        py::arg("scheme"), py::arg("net"),
        "Returns (nats, bits) per channel use");

  m.def("simulate_closed",
        [](const std::string& scheme, const NetworkConfig& net,
           const ThresholdGrid& grid, const mc::McConfig& cfg) {
          return mc::simulate_closed(scheme_from_name(scheme), net, grid, cfg);
        },
        py::arg("scheme"), py::arg("net"), py::arg("grid"), py::arg("mc"));
  m.def("simulate_open",
        [](const std::string& scheme, const open::OpenScenario& scen,
           const ThresholdGrid& grid, const mc::McConfig& cfg) {
          return mc::simulate_open(scheme_from_name(scheme), scen, grid, cfg);
        },
        py::arg("scheme"), py::arg("scen"), py::arg("grid"), py::arg("mc"));

  m.def("parse_scenario",
        [](const std::string& text) {
          const auto sc = scenario::parse_scenario(text);
          py::dict d;
          d["scheme"] = scenario::scheme_name(sc.scheme);
          d["access"] = scenario::access_name(sc.access);
          d["net"] = sc.net;
          d["grid"] = sc.grid;
          d["mc"] = sc.mc;
          if (sc.open_scen) d["open"] = *sc.open_scen;
          return d;
        },
        py::arg("json_text"),
        "Parse a scenario JSON document into its typed parts");

  m.def("discrepancy_report", &format_discrepancy_report);
}
