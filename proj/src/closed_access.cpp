#include "hffr/closed_access.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hffr/errors.hpp"
#include "hffr/kernels.hpp"

namespace hffr::closed {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Analytic values may poke out of [0, 1] by quadrature noise; anything
// beyond this is a formula bug and must not be papered over.
constexpr double kClampSlack = 1e-9;

struct QuadFlag {
  bool converged = true;
};

double clamp_probability(double v, const char* what) {
  if (!(v > -kClampSlack && v < 1.0 + kClampSlack))
    fail(errc::evaluation,
         std::string(what) + " evaluated to " + std::to_string(v) +
             ", outside [0,1] beyond numerical slack");
  return std::clamp(v, 0.0, 1.0);
}

// Sum over cross tiers of kappa_k * psi(gamma_k * t): their full-field
// interference contribution at effective threshold t.
double cross_tier_sum(const NetworkConfig& net, double t) {
  double s = 0.0;
  for (std::size_t k = 1; k < net.num_tiers(); ++k)
    s += net.kappa(k) * kernels::psi(net.gamma(k) * t, net.alpha);
  return s;
}

// pi*lam1 * Int_0^inf exp(-pi*lam1*a*v - b*v^(alpha/2)) dv over the serving
// distance distribution (v = r^2). Collapses to 1/a in the no-noise case.
double coverage_integral(double a, double b, const NetworkConfig& net,
                         const quad::QuadPolicy& pol, QuadFlag* flag) {
  if (b <= 0.0) return 1.0 / a;
  const double pl = kPi * net.tiers[0].density;
  const double ha = 0.5 * net.alpha;
  auto f = [pl, a, b, ha](double v) {
    return std::exp(-pl * a * v - b * std::pow(v, ha));
  };
  auto r = quad::integrate_semi_inf(f, 0.0, pol);
  if (flag) flag->converged = flag->converged && r.converged;
  return pl * r.value;
}

// P(shared-band SINR < T1) = 1 - I(1 + x, b), but computed as an integral of
// a non-negative quantity (via expm1) so tiny conditioning probabilities
// keep full relative accuracy instead of cancelling against 1.
double conditioning_from_terms(double x, double b, const NetworkConfig& net,
                               const quad::QuadPolicy& pol, QuadFlag* flag) {
  if (b <= 0.0) return x / (1.0 + x);
  const double pl = kPi * net.tiers[0].density;
  const double ha = 0.5 * net.alpha;
  auto f = [pl, x, b, ha](double v) {
    return std::exp(-pl * v) * (-std::expm1(-pl * x * v - b * std::pow(v, ha)));
  };
  auto r = quad::integrate_semi_inf(f, 0.0, pol);
  if (flag) flag->converged = flag->converged && r.converged;
  return pl * r.value;
}

// Values the per-point evaluators share across a whole curve.
struct SchemeContext {
  double t1 = 1.0;     // macro FFR threshold
  double s1 = 0.0;     // cross-tier sum at t1
  double eta_ = 1.0;   // per-band SFR power factor
  double denom = 1.0;  // conditioning probability
};

double noise_scale(const NetworkConfig& net) {
  return net.mu * net.sigma2 / net.tiers[0].power;
}

SchemeContext make_context(ReuseScheme scheme, const NetworkConfig& net,
                           const quad::QuadPolicy& pol, QuadFlag* flag,
                           bool fast) {
  SchemeContext ctx;
  ctx.t1 = net.tiers[0].ffr_threshold;
  ctx.s1 = cross_tier_sum(net, ctx.t1);
  ctx.eta_ = eta(net.beta, net.delta);
  const double arg = scheme == ReuseScheme::sfr ? ctx.eta_ * ctx.t1 : ctx.t1;
  const double rho1 = fast ? kernels::rho_alpha4(arg) : kernels::rho(arg, net.alpha, pol);
  ctx.denom = conditioning_from_terms(rho1 + 2.0 * ctx.s1,
                                      noise_scale(net) * ctx.t1, net, pol, flag);
  if (!(ctx.denom > 1e-12))
    fail(errc::degenerate_conditioning,
         "edge-user event has probability " + std::to_string(ctx.denom) +
             "; the conditional CCDF is undefined");
  return ctx;
}

double strict_point(double t, const NetworkConfig& net, const SchemeContext& ctx,
                    bool fast, const quad::QuadPolicy& pol, QuadFlag* flag) {
  const double ns = noise_scale(net);
  const double delta = static_cast<double>(net.delta);
  const double rho_t = fast ? kernels::rho_alpha4(t) : kernels::rho(t, net.alpha, pol);
  const double n1 =
      coverage_integral(1.0 + rho_t / delta, ns * t, net, pol, flag);
  const double xi = fast ? kernels::xi_closed_alpha4(t, ctx.t1, net.delta)
                         : kernels::xi_closed(t, ctx.t1, net.alpha, net.delta, pol);
  const double n2 = coverage_integral(1.0 + 2.0 * xi + 2.0 * ctx.s1,
                                      ns * (t + ctx.t1), net, pol, flag);
  return clamp_probability((n1 - n2) / ctx.denom, "strict FFR edge CCDF");
}

double sfr_point(double t, const NetworkConfig& net, const SchemeContext& ctx,
                 bool fast, const quad::QuadPolicy& pol, QuadFlag* flag) {
  const double ns = noise_scale(net);
  const double sb = cross_tier_sum(net, t / net.beta);
  const double boosted = ctx.eta_ * t / net.beta;
  const double rho_b =
      fast ? kernels::rho_alpha4(boosted) : kernels::rho(boosted, net.alpha, pol);
  const double m1 = coverage_integral(1.0 + rho_b + 2.0 * sb,
                                      ns * t / net.beta, net, pol, flag);
  const double zeta =
      fast ? kernels::zeta_closed_alpha4(t, ctx.t1, net.beta, ctx.eta_)
           : kernels::zeta_closed(t, ctx.t1, net.alpha, net.beta, ctx.eta_, pol);
  const double m2 =
      coverage_integral(1.0 + 2.0 * zeta + 2.0 * sb + 2.0 * ctx.s1,
                        ns * (t / net.beta + ctx.t1), net, pol, flag);
  return clamp_probability((m1 - m2) / ctx.denom, "SFR edge CCDF");
}

// Stay-on-band baseline: the SFR expressions degenerate to it at
// beta = delta = 1 (fresh fading, full-power full-density interference).
double universal_edge_point(double t, const NetworkConfig& net,
                            const SchemeContext& ctx, bool fast,
                            const quad::QuadPolicy& pol, QuadFlag* flag) {
  const double ns = noise_scale(net);
  const double st = cross_tier_sum(net, t);
  const double rho_t = fast ? kernels::rho_alpha4(t) : kernels::rho(t, net.alpha, pol);
  const double m1 =
      coverage_integral(1.0 + rho_t + 2.0 * st, ns * t, net, pol, flag);
  const double zeta = fast ? kernels::zeta_closed_alpha4(t, ctx.t1, 1.0, 1.0)
                           : kernels::zeta_closed(t, ctx.t1, net.alpha, 1.0, 1.0, pol);
  const double m2 =
      coverage_integral(1.0 + 2.0 * zeta + 2.0 * st + 2.0 * ctx.s1,
                        ns * (t + ctx.t1), net, pol, flag);
  return clamp_probability((m1 - m2) / ctx.denom, "baseline edge CCDF");
}

void check_threshold_arg(double t) {
  if (!(std::isfinite(t) && t >= 0.0))
    fail(errc::invalid_argument, "SINR threshold must be non-negative and finite");
}

bool fast_eligible(const NetworkConfig& net) {
  return net.alpha == 4.0 && net.sigma2 == 0.0;
}

CcdfCurve curve_impl(ReuseScheme scheme, const NetworkConfig& net,
                     const ThresholdGrid& grid, const quad::QuadPolicy& pol,
                     bool fast) {
  net.validate();
  grid.validate();
  CcdfCurve out;
  out.grid = grid;
  out.scheme = scheme;
  out.access = AccessMode::closed;

  QuadFlag ctx_flag;
  SchemeContext ctx;
  if (scheme != ReuseScheme::universal)
    ctx = make_context(scheme, net, pol, &ctx_flag, fast);

  const std::size_t n = grid.size();
  out.values.reserve(n);
  out.warnings.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = grid.at_linear(i);
    QuadFlag flag;
    flag.converged = ctx_flag.converged;
    double v = 0.0;
    switch (scheme) {
      case ReuseScheme::universal: {
        const double x = (fast ? kernels::rho_alpha4(t) : kernels::rho(t, net.alpha, pol)) +
                         2.0 * cross_tier_sum(net, t);
        v = clamp_probability(
            coverage_integral(1.0 + x, noise_scale(net) * t, net, pol, &flag),
            "shared-band coverage");
        break;
      }
      case ReuseScheme::strict_ffr:
        v = strict_point(t, net, ctx, fast, pol, &flag);
        break;
      case ReuseScheme::sfr:
        v = sfr_point(t, net, ctx, fast, pol, &flag);
        break;
    }
    out.values.push_back(v);
    out.warnings.push_back(flag.converged
                               ? std::string()
                               : "quadrature did not converge; value is best estimate");
  }
  return out;
}

}  // namespace

double reuse_delta_coverage(double t, const NetworkConfig& net,
                            const quad::QuadPolicy& pol) {
  net.validate();
  check_threshold_arg(t);
  const double rho_t = kernels::rho(t, net.alpha, pol);
  return clamp_probability(
      coverage_integral(1.0 + rho_t / static_cast<double>(net.delta),
                        noise_scale(net) * t, net, pol, nullptr),
      "reuse-delta coverage");
}

double universal_coverage_multitier(double t, const NetworkConfig& net,
                                    const quad::QuadPolicy& pol) {
  net.validate();
  check_threshold_arg(t);
  const double x = kernels::rho(t, net.alpha, pol) + 2.0 * cross_tier_sum(net, t);
  return clamp_probability(
      coverage_integral(1.0 + x, noise_scale(net) * t, net, pol, nullptr),
      "shared-band coverage");
}

double conditioning_probability(ReuseScheme scheme, const NetworkConfig& net,
                                const quad::QuadPolicy& pol) {
  net.validate();
  return make_context(scheme, net, pol, nullptr, false).denom;
}

double strict_ffr_edge_ccdf(double t, const NetworkConfig& net,
                            const quad::QuadPolicy& pol) {
  net.validate();
  check_threshold_arg(t);
  const SchemeContext ctx = make_context(ReuseScheme::strict_ffr, net, pol, nullptr, false);
  return strict_point(t, net, ctx, false, pol, nullptr);
}

double sfr_edge_ccdf(double t, const NetworkConfig& net,
                     const quad::QuadPolicy& pol) {
  net.validate();
  check_threshold_arg(t);
  const SchemeContext ctx = make_context(ReuseScheme::sfr, net, pol, nullptr, false);
  return sfr_point(t, net, ctx, false, pol, nullptr);
}

double universal_edge_ccdf(double t, const NetworkConfig& net,
                           const quad::QuadPolicy& pol) {
  net.validate();
  check_threshold_arg(t);
  // Conditions on the same shared-band event as strict FFR.
  const SchemeContext ctx =
      make_context(ReuseScheme::strict_ffr, net, pol, nullptr, false);
  return universal_edge_point(t, net, ctx, false, pol, nullptr);
}

double strict_ffr_edge_ccdf_fast(double t, const NetworkConfig& net) {
  net.validate();
  check_threshold_arg(t);
  if (!fast_eligible(net))
    fail(errc::unsupported,
         "closed-form evaluation needs alpha == 4 and zero noise");
  const SchemeContext ctx =
      make_context(ReuseScheme::strict_ffr, net, {}, nullptr, true);
  return strict_point(t, net, ctx, true, {}, nullptr);
}

double sfr_edge_ccdf_fast(double t, const NetworkConfig& net) {
  net.validate();
  check_threshold_arg(t);
  if (!fast_eligible(net))
    fail(errc::unsupported,
         "closed-form evaluation needs alpha == 4 and zero noise");
  const SchemeContext ctx = make_context(ReuseScheme::sfr, net, {}, nullptr, true);
  return sfr_point(t, net, ctx, true, {}, nullptr);
}

CcdfCurve ccdf_curve(ReuseScheme scheme, const NetworkConfig& net,
                     const ThresholdGrid& grid, const quad::QuadPolicy& pol) {
  return curve_impl(scheme, net, grid, pol, fast_eligible(net));
}

CcdfCurve ccdf_curve_quadrature(ReuseScheme scheme, const NetworkConfig& net,
                                const ThresholdGrid& grid,
                                const quad::QuadPolicy& pol) {
  return curve_impl(scheme, net, grid, pol, false);
}

}  // namespace hffr::closed
