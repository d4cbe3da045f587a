#pragma once

#include "hffr/closed_access.hpp"
#include "hffr/model.hpp"
#include "hffr/quadrature.hpp"

namespace hffr::open {

// Two-tier interference-limited network where a user may be served by either
// tier; a user is an edge user when it fails tier 1's threshold t1 AND tier
// 2's threshold t2 (both linear). The closed-form layer requires sigma2 == 0.
struct OpenScenario {
  NetworkConfig net;  // exactly two tiers, sigma2 == 0
  double t1 = 1.0;
  double t2 = 1.0;

  void validate() const;
};

// Conditioning and numerator integrands at fixed nearest-point radii
// (r1, r2), before averaging over the joint radius distribution. g_* is the
// strict-FFR pair, f_* the SFR pair. *_d is P(edge user | r1, r2); *_n is
// the complementary joint P(reserved-band SINR > t, NOT an edge user |
// r1, r2), which the evaluator subtracts from the unconditional reserved-
// band coverage, avoiding a difference of two near-equal exponentials in
// the integrand itself. Hence *_n(0, r1, r2) == 1 - *_d(r1, r2).
double gd_strict(double r1, double r2, const OpenScenario& scen,
                 const quad::QuadPolicy& policy = {});
double gn_strict(double t, double r1, double r2, const OpenScenario& scen,
                 const quad::QuadPolicy& policy = {});
double fd_sfr(double r1, double r2, const OpenScenario& scen,
              const quad::QuadPolicy& policy = {});
double fn_sfr(double t, double r1, double r2, const OpenScenario& scen,
              const quad::QuadPolicy& policy = {});

// P(edge user) after radius averaging.
double conditioning_probability(ReuseScheme scheme, const OpenScenario& scen,
                                const quad::QuadPolicy& policy = {});

// Edge-user coverage on the reserved band given the user is an edge user.
double strict_ffr_edge_ccdf(double t, const OpenScenario& scen,
                            const quad::QuadPolicy& policy = {});
double sfr_edge_ccdf(double t, const OpenScenario& scen,
                     const quad::QuadPolicy& policy = {});

closed::CcdfCurve ccdf_curve(ReuseScheme scheme, const OpenScenario& scen,
                             const ThresholdGrid& grid,
                             const quad::QuadPolicy& policy = {});

// Evaluates the edge CCDF at many thresholds while paying the (expensive,
// threshold-independent) conditioning integral only once. The curve and rate
// routines are built on this.
class EdgeEvaluator {
 public:
  EdgeEvaluator(ReuseScheme scheme, const OpenScenario& scen,
                const quad::QuadPolicy& policy = {});
  // Returns the edge CCDF at linear threshold t; *converged (optional)
  // is cleared if a quadrature failed to meet tolerance.
  double operator()(double t, bool* converged = nullptr) const;
  double denominator() const { return denom_; }

 private:
  ReuseScheme scheme_;
  OpenScenario scen_;
  quad::QuadPolicy policy_;
  double denom_ = 1.0;
};

// Shift the association thresholds apart by bias_db while keeping their dB
// midpoint: t1 rises by bias_db/2, t2 drops by bias_db/2.
OpenScenario apply_bias(const OpenScenario& scen, double bias_db);

}  // namespace hffr::open
