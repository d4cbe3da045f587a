// Acceptance gate for the coverage/rate stack: eight timed criteria, one
// PASS/FAIL line each, non-zero exit when any fails. Tolerances and budgets
// are pinned here on purpose; loosening them is a code change, not a flag.
//
// Usage: hffr_acceptance [scenarios_dir]   (default "scenarios")

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "hffr/closed_access.hpp"
#include "hffr/discrepancy.hpp"
#include "hffr/errors.hpp"
#include "hffr/kernels.hpp"
#include "hffr/model.hpp"
#include "hffr/montecarlo.hpp"
#include "hffr/open_access.hpp"
#include "hffr/rate.hpp"
#include "hffr/report.hpp"
#include "hffr/scenario.hpp"

namespace {

using namespace hffr;

int g_failures = 0;

struct Check {
  bool pass = true;
  std::ostringstream detail;

  // Records a named quantity and fails the criterion if it exceeds limit.
  void bound(const char* label, double value, double limit) {
    if (!(value <= limit)) pass = false;
    detail << (detail.tellp() > 0 ? ", " : "") << label << " " << value
           << (value <= limit ? " <= " : " EXCEEDS ") << limit;
  }
  void require(const char* label, bool ok) {
    if (!ok) pass = false;
    detail << (detail.tellp() > 0 ? ", " : "") << label << (ok ? " ok" : " FAILED");
  }
  void note(const char* label, double value) {
    detail << (detail.tellp() > 0 ? ", " : "") << label << " " << value;
  }
};

// Runs one criterion, prints its verdict line, tracks the global failure
// count. budget_s <= 0 disables the runtime check.
void criterion(int index, const char* title, double budget_s,
               const std::function<void(Check&)>& body) {
  Check check;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(check);
  } catch (const std::exception& e) {
    check.pass = false;
    check.detail << (check.detail.tellp() > 0 ? ", " : "")
                 << "exception: " << e.what();
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (budget_s > 0.0 && elapsed >= budget_s) {
    check.pass = false;
    check.detail << (check.detail.tellp() > 0 ? ", " : "") << "runtime "
                 << elapsed << " s EXCEEDS budget " << budget_s << " s";
  }
  std::printf("[%s] criterion %d: %s (%.1f s) -- %s\n",
              check.pass ? "PASS" : "FAIL", index, title, elapsed,
              check.detail.str().c_str());
  std::fflush(stdout);
  if (!check.pass) ++g_failures;
}

double max_abs_curve_diff(const std::vector<double>& a,
                          const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst, std::fabs(a[i] - b[i]));
  return worst;
}

// Largest pointwise drop of b below a (0 when b dominates a everywhere).
double max_dominance_gap(const std::vector<double>& lower,
                         const std::vector<double>& upper) {
  double worst = 0.0;
  for (std::size_t i = 0; i < lower.size(); ++i)
    worst = std::max(worst, lower[i] - upper[i]);
  return worst;
}

// --- criterion bodies -------------------------------------------------

void kernel_equivalence(Check& check) {
  const quad::QuadPolicy base;
  quad::QuadPolicy halved = base;
  halved.rel_tol /= 2.0;
  halved.abs_tol /= 2.0;

  double worst_self = 0.0;
  double worst_a4 = 0.0;
  for (const double alpha : {3.0, 3.5, 4.0, 5.0}) {
    for (int i = 0; i < 200; ++i) {
      const double z = std::pow(10.0, -2.0 + 4.0 * i / 199.0);
      const double v = kernels::rho(z, alpha, base);
      worst_self = std::max(worst_self,
                            std::fabs(v - kernels::rho(z, alpha, halved)));
      if (alpha == 4.0)
        worst_a4 = std::max(
            worst_a4, std::fabs(v - kernels::rho_alpha4(z)) / kernels::rho_alpha4(z));
    }
  }
  check.bound("tolerance-halving diff", worst_self, 1e-9);
  check.bound("alpha=4 rel diff", worst_a4, 1e-9);
}

void trivial_limits(Check& check) {
  constexpr double kTol = 1e-8;
  const double ts[] = {0.05, 0.7, 1.0, 3.0, 20.0};
  double worst = 0.0;
  for (const double alpha : {3.0, 3.5, 4.0, 5.0}) {
    for (const double t : ts) {
      for (const int delta : {1, 2, 3, 6}) {
        worst = std::max(worst, std::fabs(kernels::xi_closed(0.0, t, alpha, delta) -
                                          kernels::rho(t, alpha) / 2.0));
        worst = std::max(worst, std::fabs(kernels::xi_closed(t, 0.0, alpha, delta) -
                                          kernels::rho(t, alpha) / (2.0 * delta)));
        for (const double beta : {1.0, 2.0, 4.0}) {
          const double e = eta(beta, delta);
          worst = std::max(worst,
                           std::fabs(kernels::zeta_closed(0.0, t, alpha, beta, e) -
                                     kernels::rho(e * t, alpha) / 2.0));
          worst = std::max(worst,
                           std::fabs(kernels::zeta_closed(t, 0.0, alpha, beta, e) -
                                     kernels::rho(e / beta * t, alpha) / 2.0));
        }
      }
    }
  }
  check.bound("joint-kernel limit diff", worst, kTol);

  // Selection weights: complementary when t1*t2 == 1, saturating when one
  // tier is overwhelmingly closer.
  double worst_eps = 0.0;
  for (const double gamma : {0.1, 1.0, 5.0}) {
    for (const double r1 : {0.2, 1.0, 2.5}) {
      for (const double r2 : {0.3, 1.0, 4.0}) {
        const auto w = kernels::epsilon_weights(2.0, 0.5, gamma, r1, r2, 4.0);
        worst_eps = std::max(worst_eps, std::fabs(w.eps1 + w.eps2 - 1.0));
        const auto u = kernels::epsilon_weights(1.0, 1.0, gamma, r1, r2, 3.5);
        worst_eps = std::max(worst_eps, std::fabs(u.eps1 + u.eps2 - 1.0));
      }
    }
  }
  const auto near1 = kernels::epsilon_weights(2.0, 3.0, 0.5, 1e-9, 1.0, 4.0);
  worst_eps = std::max(worst_eps, std::fabs(near1.eps1 - 1.0));
  worst_eps = std::max(worst_eps, std::fabs(near1.eps2));
  const auto near2 = kernels::epsilon_weights(2.0, 3.0, 0.5, 1.0, 1e-9, 4.0);
  worst_eps = std::max(worst_eps, std::fabs(near2.eps1));
  worst_eps = std::max(worst_eps, std::fabs(near2.eps2 - 1.0));
  check.bound("selection-weight limit diff", worst_eps, kTol);
}

void fast_path_equivalence(Check& check, const scenario::Scenario& sc) {
  for (const auto scheme : {ReuseScheme::strict_ffr, ReuseScheme::sfr}) {
    const auto fast = closed::ccdf_curve(scheme, sc.net, sc.grid);
    const auto quad = closed::ccdf_curve_quadrature(scheme, sc.net, sc.grid);
    check.bound(scheme == ReuseScheme::strict_ffr ? "strict max |fast-quad|"
                                                  : "sfr max |fast-quad|",
                max_abs_curve_diff(fast.values, quad.values), 1e-6);
  }
}

void closed_mc_agreement(Check& check, const scenario::Scenario& sc) {
  mc::McConfig cfg = sc.mc;
  cfg.drops = 200000;
  for (const auto scheme : {ReuseScheme::strict_ffr, ReuseScheme::sfr}) {
    const auto analytic = closed::ccdf_curve(scheme, sc.net, sc.grid);
    const auto emp = mc::simulate_closed(scheme, sc.net, sc.grid, cfg);
    const auto cmp = mc::compare_curves(analytic, emp);
    const bool strict = scheme == ReuseScheme::strict_ffr;
    check.bound(strict ? "strict max |diff|" : "sfr max |diff|",
                cmp.max_abs_diff, 0.015);
    check.require(strict ? "strict >=95% within 3 sigma" : "sfr >=95% within 3 sigma",
                  cmp.frac_within_3sigma >= 0.95);
  }
}

void open_mc_agreement(Check& check, const scenario::Scenario& sc) {
  mc::McConfig cfg = sc.mc;
  cfg.drops = 100000;
  for (const auto scheme : {ReuseScheme::strict_ffr, ReuseScheme::sfr}) {
    const auto analytic = open::ccdf_curve(scheme, *sc.open_scen, sc.grid);
    const auto emp = mc::simulate_open(scheme, *sc.open_scen, sc.grid, cfg);
    const auto cmp = mc::compare_curves(analytic, emp);
    check.bound(scheme == ReuseScheme::strict_ffr ? "strict max |diff|"
                                                  : "sfr max |diff|",
                cmp.max_abs_diff, 0.02);
  }
}

void qualitative_claims(Check& check, const scenario::Scenario& closed_sc,
                        const scenario::Scenario& open_sc) {
  const auto& net = closed_sc.net;
  const auto& grid = closed_sc.grid;

  // (a) moving edge users to a reserved band beats staying put, pointwise.
  const auto strict = closed::ccdf_curve(ReuseScheme::strict_ffr, net, grid);
  std::vector<double> uedge(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    uedge[i] = closed::universal_edge_ccdf(grid.at_linear(i), net);
  check.bound("baseline-over-strict gap", max_dominance_gap(uedge, strict.values),
              1e-9);

  // (b) the reserved band beats the boosted shared band at 0 dB.
  check.require("strict >= sfr at 0 dB",
                closed::strict_ffr_edge_ccdf_fast(1.0, net) >=
                    closed::sfr_edge_ccdf_fast(1.0, net));

  // (c) denser cross tiers make conditioning harsher but leave the reserved
  // band clean, so strict-FFR edge coverage rises with kappa.
  double worst_kappa = 0.0;
  std::vector<double> prev;
  for (const double kappa : {1.0, 2.0, 4.0, 8.0}) {
    const auto swept =
        scenario::apply_sweep_value(closed_sc, scenario::SweepParam::kappa, kappa);
    const auto curve = closed::ccdf_curve(ReuseScheme::strict_ffr, swept.net, grid);
    if (!prev.empty())
      worst_kappa = std::max(worst_kappa, max_dominance_gap(prev, curve.values));
    prev = curve.values;
  }
  check.bound("kappa-sweep monotonicity gap", worst_kappa, 1e-9);

  // (d) letting edge users associate with either tier shifts coverage up
  // (0.01 slack mirrors the resolution of the claim).
  for (const auto scheme : {ReuseScheme::strict_ffr, ReuseScheme::sfr}) {
    const auto closed_curve = closed::ccdf_curve(scheme, open_sc.net, grid);
    const auto open_curve = open::ccdf_curve(scheme, *open_sc.open_scen, grid);
    check.bound(scheme == ReuseScheme::strict_ffr ? "closed-over-open gap (strict)"
                                                  : "closed-over-open gap (sfr)",
                max_dominance_gap(closed_curve.values, open_curve.values) , 0.01);
  }
}

void rate_consistency(Check& check, const scenario::Scenario& closed_sc,
                      const scenario::Scenario& open_sc) {
  // Single-tier universal reuse: analytic tail integral vs sample mean.
  NetworkConfig single;
  single.tiers = {TierConfig{1.0, 1.0, 1.0}};
  single.alpha = 4.0;
  single.sigma2 = 0.0;
  single.delta = 1;
  single.beta = 1.0;
  const double analytic = rate::average_edge_rate(ReuseScheme::universal, single).nats;
  mc::McConfig cfg;
  cfg.drops = 40000;
  cfg.seed = 42;
  const double sampled =
      mc::estimate_rate_closed(ReuseScheme::universal, single, cfg).nats;
  check.bound("universal rate rel diff",
              std::fabs(analytic - sampled) / analytic, 0.02);

  // CCDF dominance must carry over to the rates it integrates into.
  const auto& net = closed_sc.net;
  NetworkConfig stay = net;
  stay.beta = 1.0;
  stay.delta = 1;
  const double rate_strict =
      rate::average_edge_rate(ReuseScheme::strict_ffr, net).nats;
  const double rate_stay = rate::average_edge_rate(ReuseScheme::sfr, stay).nats;
  check.require("strict rate >= stay-on-band rate", rate_strict >= rate_stay - 1e-9);

  double prev_rate = 0.0;
  bool kappa_monotone = true;
  for (const double kappa : {1.0, 2.0, 4.0, 8.0}) {
    const auto swept =
        scenario::apply_sweep_value(closed_sc, scenario::SweepParam::kappa, kappa);
    const double r =
        rate::average_edge_rate(ReuseScheme::strict_ffr, swept.net).nats;
    if (r < prev_rate - 1e-9) kappa_monotone = false;
    prev_rate = r;
  }
  check.require("kappa-sweep rates non-decreasing", kappa_monotone);

  for (const auto scheme : {ReuseScheme::strict_ffr, ReuseScheme::sfr}) {
    const double rate_open = rate::average_edge_rate(scheme, *open_sc.open_scen).nats;
    const double rate_closed = rate::average_edge_rate(scheme, open_sc.net).nats;
    check.require(scheme == ReuseScheme::strict_ffr
                      ? "open rate >= closed rate (strict)"
                      : "open rate >= closed rate (sfr)",
                  rate_open >= rate_closed - 0.01);
  }
}

void determinism_and_robustness(Check& check, const scenario::Scenario& sc) {
  // Identical seed must give byte-identical CSV no matter the worker count.
  std::string first;
  bool identical = true;
  for (const int threads : {1, 4, 8}) {
    mc::McConfig cfg = sc.mc;
    cfg.threads = threads;
    const auto emp = mc::simulate_closed(ReuseScheme::strict_ffr, sc.net, sc.grid, cfg);
    std::ostringstream os;
    report::write_simulated_csv(os, emp);
    if (first.empty())
      first = os.str();
    else if (os.str() != first)
      identical = false;
  }
  check.require("CSV byte-identical across 1/4/8 workers", identical);

  // The far field beyond the automatic truncation radius must be negligible:
  // doubling the radius only appends interferer rings, so the comparison is
  // between coupled realizations, not independent noise.
  mc::McConfig cfg = sc.mc;
  cfg.drops = 100000;
  const auto base = mc::simulate_closed(ReuseScheme::strict_ffr, sc.net, sc.grid, cfg);
  cfg.region_radius = 2.0 * mc::auto_region_radius(sc.net);
  const auto wide = mc::simulate_closed(ReuseScheme::strict_ffr, sc.net, sc.grid, cfg);
  check.bound("radius-doubling max shift",
              max_abs_curve_diff(base.values, wide.values), 0.002);
}

}  // namespace

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : "scenarios";
  scenario::Scenario closed_sc, open_sc;
  try {
    closed_sc = scenario::load_scenario_file(dir + "/closed_strict.json");
    open_sc = scenario::load_scenario_file(dir + "/open_strict.json");
  } catch (const std::exception& e) {
    std::fprintf(stderr, "cannot load bundled scenarios from '%s': %s\n",
                 dir.c_str(), e.what());
    return 1;
  }

  criterion(1, "kernel equivalence under tolerance halving and alpha=4 form", 5.0,
            kernel_equivalence);
  criterion(2, "trivial limits of joint kernels and selection weights", 5.0,
            trivial_limits);
  criterion(3, "closed-form fast paths match quadrature", 30.0,
            [&](Check& c) { fast_path_equivalence(c, closed_sc); });
  criterion(4, "closed-access analytics match simulation", 300.0,
            [&](Check& c) { closed_mc_agreement(c, closed_sc); });
  criterion(5, "open-access analytics match simulation", 600.0,
            [&](Check& c) { open_mc_agreement(c, open_sc); });
  criterion(6, "qualitative coverage ordering claims", 0.0,
            [&](Check& c) { qualitative_claims(c, closed_sc, open_sc); });
  criterion(7, "rate consistency and monotonicity", 0.0,
            [&](Check& c) { rate_consistency(c, closed_sc, open_sc); });
  criterion(8, "determinism across workers, robustness to truncation", 0.0,
            [&](Check& c) { determinism_and_robustness(c, closed_sc); });

  std::printf("\n%s\n", format_discrepancy_report().c_str());
  if (g_failures > 0) {
    std::printf("acceptance: %d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("acceptance: all 8 criteria passed\n");
  return 0;
}
