#include "hffr/rate.hpp"

#include <cmath>

#include "hffr/closed_access.hpp"
#include "hffr/errors.hpp"

namespace hffr::rate {

namespace {

// Spectral-efficiency tail threshold: contributions below this are beyond
// the accuracy anything downstream (plots, MC comparisons) can resolve.
constexpr double kTailCut = 1e-8;

}  // namespace

RateResult average_rate_from_ccdf(const std::function<double(double)>& ccdf,
                                  const quad::QuadPolicy& policy) {
  RateResult res;
  // E[ln(1+S)] = Int_0^inf P(S > e^t - 1) dt; bracket the tail by doubling.
  double t_hi = 1.0;
  int doublings = 0;
  while (ccdf(std::expm1(t_hi)) >= kTailCut && doublings < 12) {
    t_hi *= 2.0;
    ++doublings;
  }
  if (doublings == 12)
    res.warnings.push_back("rate tail still above cutoff at t = 4096 nats; result truncated");

  quad::QuadPolicy pol = policy;
  pol.rel_tol = std::max(policy.rel_tol, 1e-8);
  pol.abs_tol = std::max(policy.abs_tol, 1e-10);
  auto integrand = [&ccdf](double t) { return ccdf(std::expm1(t)); };
  const auto r = quad::integrate_finite(integrand, 0.0, t_hi, pol);
  res.nats = r.value;
  if (!r.converged)
    res.warnings.push_back("rate quadrature did not converge; value is best estimate");
  return res;
}

RateResult average_edge_rate(ReuseScheme scheme, const NetworkConfig& net,
                             const quad::QuadPolicy& policy) {
  net.validate();
  const bool fast = net.alpha == 4.0 && net.sigma2 == 0.0;
  std::function<double(double)> ccdf;
  switch (scheme) {
    case ReuseScheme::universal:
      ccdf = [&net, &policy](double t) {
        return closed::universal_coverage_multitier(t, net, policy);
      };
      break;
    case ReuseScheme::strict_ffr:
      ccdf = fast ? std::function<double(double)>([&net](double t) {
               return closed::strict_ffr_edge_ccdf_fast(t, net);
             })
                  : std::function<double(double)>([&net, &policy](double t) {
                      return closed::strict_ffr_edge_ccdf(t, net, policy);
                    });
      break;
    case ReuseScheme::sfr:
      ccdf = fast ? std::function<double(double)>([&net](double t) {
               return closed::sfr_edge_ccdf_fast(t, net);
             })
                  : std::function<double(double)>([&net, &policy](double t) {
                      return closed::sfr_edge_ccdf(t, net, policy);
                    });
      break;
  }
  RateResult res = average_rate_from_ccdf(ccdf, policy);
  res.scheme = scheme;
  res.access = AccessMode::closed;
  return res;
}

RateResult average_edge_rate(ReuseScheme scheme, const open::OpenScenario& scen,
                             const quad::QuadPolicy& policy) {
  scen.validate();
  if (scheme == ReuseScheme::universal)
    fail(errc::unsupported, "open access defines edge rates for strict_ffr and sfr only");
  const open::EdgeEvaluator eval(scheme, scen, policy);
  RateResult res = average_rate_from_ccdf(
      [&eval](double t) { return eval(t); }, policy);
  res.scheme = scheme;
  res.access = AccessMode::open;
  return res;
}

}  // namespace hffr::rate
