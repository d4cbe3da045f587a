#include "hffr/open_access.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hffr/errors.hpp"
#include "hffr/kernels.hpp"

namespace hffr::open {

namespace {

constexpr double kPi = 3.14159265358979323846;

// 2D quadrature is noisier than the 1D closed-access path, so the
// out-of-range guard is correspondingly looser.
constexpr double kClampSlack = 1e-6;

double clamp_probability(double v, const char* what) {
  if (!(v > -kClampSlack && v < 1.0 + kClampSlack))
    fail(errc::evaluation,
         std::string(what) + " evaluated to " + std::to_string(v) +
             ", outside [0,1] beyond numerical slack");
  return std::clamp(v, 0.0, 1.0);
}

struct Net2 {
  double lam1, lam2, gam, alpha;
  int delta;
  double beta, eta_;
};

Net2 unpack(const OpenScenario& scen) {
  Net2 n;
  n.lam1 = scen.net.tiers[0].density;
  n.lam2 = scen.net.tiers[1].density;
  n.gam = scen.net.gamma(1);
  n.alpha = scen.net.alpha;
  n.delta = scen.net.delta;
  n.beta = scen.net.beta;
  n.eta_ = eta(scen.net.beta, scen.net.delta);
  return n;
}

// Radius beyond which the Rayleigh nearest-distance weight is below 1e-14:
// the 2D averaging integrals are truncated there.
double weight_cutoff(double lam) { return std::sqrt(-std::log(1e-14) / (kPi * lam)); }

double rayleigh_weight(double lam, double r) {
  return 2.0 * kPi * lam * r * std::exp(-kPi * lam * r * r);
}

// Average an (r1, r2)-conditional quantity over the independent nearest-
// point distance distributions of the two tiers.
quad::QuadResult radius_average(const Net2& n,
                                const std::function<double(double, double)>& f,
                                const quad::QuadPolicy& pol) {
  auto integrand = [&n, &f](double r1, double r2) {
    return rayleigh_weight(n.lam1, r1) * rayleigh_weight(n.lam2, r2) * f(r1, r2);
  };
  return quad::integrate_2d_finite(integrand, 0.0, weight_cutoff(n.lam1), 0.0,
                                   weight_cutoff(n.lam2), pol);
}

}  // namespace

void OpenScenario::validate() const {
  net.validate();
  if (net.num_tiers() != 2)
    fail(errc::unsupported, "open access is defined for exactly two tiers, got " +
                                std::to_string(net.num_tiers()));
  if (net.sigma2 != 0.0)
    fail(errc::unsupported, "open-access expressions are interference-limited; noise must be 0");
  if (!(std::isfinite(t1) && t1 > 0.0) || !(std::isfinite(t2) && t2 > 0.0))
    fail(errc::invalid_argument, "association thresholds t1, t2 must be positive");
}

double gd_strict(double r1, double r2, const OpenScenario& scen,
                 const quad::QuadPolicy& pol) {
  const Net2 n = unpack(scen);
  const auto eps = kernels::epsilon_weights(scen.t1, scen.t2, n.gam, r1, r2, n.alpha);
  const double ea =
      eps.eps1 * std::exp(-2.0 * kPi *
                          (n.lam1 * kernels::rho_open(scen.t1, n.alpha, r1, r1, pol) +
                           n.lam2 * kernels::rho_open(n.gam * scen.t1, n.alpha, r1, r2, pol)));
  const double eb =
      eps.eps2 * std::exp(-2.0 * kPi *
                          (n.lam1 * kernels::rho_open(scen.t2 / n.gam, n.alpha, r2, r1, pol) +
                           n.lam2 * kernels::rho_open(scen.t2, n.alpha, r2, r2, pol)));
  return 1.0 - ea - eb;
}

double gn_strict(double t, double r1, double r2, const OpenScenario& scen,
                 const quad::QuadPolicy& pol) {
  const Net2 n = unpack(scen);
  const auto eps = kernels::epsilon_weights(scen.t1, scen.t2, n.gam, r1, r2, n.alpha);
  const double ea =
      eps.eps1 *
      std::exp(-2.0 * kPi *
               (n.lam1 * kernels::xi_open(t, scen.t1, n.alpha, n.delta, r1, r1, pol) +
                n.lam2 * kernels::rho_open(n.gam * scen.t1, n.alpha, r1, r2, pol)));
  const double eb =
      eps.eps2 *
      std::exp(-2.0 * kPi *
               (n.lam1 * kernels::xi_open(t, scen.t2 / n.gam, n.alpha, n.delta, r2, r1, pol) +
                n.lam2 * kernels::rho_open(scen.t2, n.alpha, r2, r2, pol)));
  return ea + eb;
}

double fd_sfr(double r1, double r2, const OpenScenario& scen,
              const quad::QuadPolicy& pol) {
  const Net2 n = unpack(scen);
  const auto eps = kernels::epsilon_weights(scen.t1, scen.t2, n.gam, r1, r2, n.alpha);
  const double ea =
      eps.eps1 *
      std::exp(-2.0 * kPi *
               (n.lam1 * kernels::rho_open(n.eta_ * scen.t1, n.alpha, r1, r1, pol) +
                n.lam2 * kernels::rho_open(n.gam * scen.t1, n.alpha, r1, r2, pol)));
  const double eb =
      eps.eps2 *
      std::exp(-2.0 * kPi *
               (n.lam1 * kernels::rho_open((n.eta_ / n.gam) * scen.t2, n.alpha, r2, r1, pol) +
                n.lam2 * kernels::rho_open(scen.t2, n.alpha, r2, r2, pol)));
  return 1.0 - ea - eb;
}

double fn_sfr(double t, double r1, double r2, const OpenScenario& scen,
              const quad::QuadPolicy& pol) {
  const Net2 n = unpack(scen);
  const auto eps = kernels::epsilon_weights(scen.t1, scen.t2, n.gam, r1, r2, n.alpha);
  // Tier-2 interference on the boosted band comes from an unconditioned
  // full field around the (always macro, distance r1) reserved-band server;
  // r1^2 carries the area units the psi kernel is normalized without.
  const double cross_new =
      2.0 * kPi * n.lam2 * r1 * r1 * kernels::psi(n.gam * t / n.beta, n.alpha);
  const double ea =
      eps.eps1 *
      std::exp(-2.0 * kPi *
                   (n.lam1 * kernels::zeta_open(t, scen.t1, n.alpha, n.beta, n.eta_,
                                                r1, r1, pol) +
                    n.lam2 * kernels::rho_open(n.gam * scen.t1, n.alpha, r1, r2, pol)) -
               cross_new);
  const double eb =
      eps.eps2 *
      std::exp(-2.0 * kPi *
                   (n.lam1 * kernels::zeta_open(t, scen.t2 / n.gam, n.alpha, n.beta,
                                                n.eta_, r2, r1, pol) +
                    n.lam2 * kernels::rho_open(scen.t2, n.alpha, r2, r2, pol)) -
               cross_new);
  return ea + eb;
}

double conditioning_probability(ReuseScheme scheme, const OpenScenario& scen,
                                const quad::QuadPolicy& pol) {
  scen.validate();
  std::function<double(double, double)> f;
  switch (scheme) {
    case ReuseScheme::strict_ffr:
      f = [&scen, &pol](double r1, double r2) { return gd_strict(r1, r2, scen, pol); };
      break;
    case ReuseScheme::sfr:
      f = [&scen, &pol](double r1, double r2) { return fd_sfr(r1, r2, scen, pol); };
      break;
    case ReuseScheme::universal:
      fail(errc::unsupported, "open access defines edge conditioning for strict_ffr and sfr only");
  }
  const Net2 n = unpack(scen);
  const double denom =
      clamp_probability(radius_average(n, f, pol).value, "edge-user probability");
  if (!(denom > 1e-12))
    fail(errc::degenerate_conditioning,
         "edge-user event has probability " + std::to_string(denom) +
             "; the conditional CCDF is undefined");
  return denom;
}

EdgeEvaluator::EdgeEvaluator(ReuseScheme scheme, const OpenScenario& scen,
                             const quad::QuadPolicy& policy)
    : scheme_(scheme), scen_(scen), policy_(policy) {
  denom_ = conditioning_probability(scheme, scen, policy);
}

double EdgeEvaluator::operator()(double t, bool* converged) const {
  if (!(std::isfinite(t) && t >= 0.0))
    fail(errc::invalid_argument, "SINR threshold must be non-negative and finite");
  const Net2 n = unpack(scen_);
  double first = 0.0;
  std::function<double(double, double)> joint;
  if (scheme_ == ReuseScheme::strict_ffr) {
    first = 1.0 / (1.0 + kernels::rho(t, n.alpha, policy_) / static_cast<double>(n.delta));
    joint = [this, t](double r1, double r2) { return gn_strict(t, r1, r2, scen_, policy_); };
  } else {
    const double kap = n.lam2 / n.lam1;
    first = 1.0 / (1.0 + kernels::rho(n.eta_ * t / n.beta, n.alpha, policy_) +
                   2.0 * kap * kernels::psi(n.gam * t / n.beta, n.alpha));
    joint = [this, t](double r1, double r2) { return fn_sfr(t, r1, r2, scen_, policy_); };
  }
  const auto avg = radius_average(n, joint, policy_);
  if (converged) *converged = *converged && avg.converged;
  return clamp_probability((first - avg.value) / denom_, "open-access edge CCDF");
}

double strict_ffr_edge_ccdf(double t, const OpenScenario& scen,
                            const quad::QuadPolicy& pol) {
  return EdgeEvaluator(ReuseScheme::strict_ffr, scen, pol)(t);
}

double sfr_edge_ccdf(double t, const OpenScenario& scen, const quad::QuadPolicy& pol) {
  return EdgeEvaluator(ReuseScheme::sfr, scen, pol)(t);
}

closed::CcdfCurve ccdf_curve(ReuseScheme scheme, const OpenScenario& scen,
                             const ThresholdGrid& grid, const quad::QuadPolicy& pol) {
  grid.validate();
  const EdgeEvaluator eval(scheme, scen, pol);
  closed::CcdfCurve out;
  out.grid = grid;
  out.scheme = scheme;
  out.access = AccessMode::open;
  const std::size_t npts = grid.size();
  out.values.reserve(npts);
  out.warnings.reserve(npts);
  for (std::size_t i = 0; i < npts; ++i) {
    bool converged = true;
    out.values.push_back(eval(grid.at_linear(i), &converged));
    out.warnings.push_back(converged
                               ? std::string()
                               : "quadrature did not converge; value is best estimate");
  }
  return out;
}

OpenScenario apply_bias(const OpenScenario& scen, double bias_db) {
  scen.validate();
  if (!std::isfinite(bias_db)) fail(errc::invalid_argument, "bias must be finite");
  const double t1_db = linear_to_db(scen.t1);
  const double t2_db = linear_to_db(scen.t2);
  const double mid = 0.5 * (t1_db + t2_db);
  OpenScenario biased = scen;
  biased.t1 = db_to_linear(mid + 0.5 * bias_db);
  biased.t2 = db_to_linear(mid - 0.5 * bias_db);
  return biased;
}

}  // namespace hffr::open
