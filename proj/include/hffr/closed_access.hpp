#pragma once

#include <string>
#include <vector>

#include "hffr/model.hpp"
#include "hffr/quadrature.hpp"

namespace hffr::closed {

// An analytically evaluated coverage curve. warnings[i] is empty unless the
// quadrature flagged point i (non-convergence keeps the best estimate and a
// note instead of failing the run).
struct CcdfCurve {
  ThresholdGrid grid;
  std::vector<double> values;
  std::vector<std::string> warnings;
  ReuseScheme scheme = ReuseScheme::universal;
  AccessMode access = AccessMode::closed;
};

// Single-tier coverage under reuse-delta (each cell confined to one of
// delta sub-bands, so interference thins by 1/delta).
double reuse_delta_coverage(double t, const NetworkConfig& net,
                            const quad::QuadPolicy& policy = {});

// Unconditional coverage of a macro user on the shared band with every tier
// interfering at full density.
double universal_coverage_multitier(double t, const NetworkConfig& net,
                                    const quad::QuadPolicy& policy = {});

// Edge-user coverage: P(reserved-band SINR > t | shared-band SINR < T1),
// where T1 is the macro tier's ffr_threshold.
double strict_ffr_edge_ccdf(double t, const NetworkConfig& net,
                            const quad::QuadPolicy& policy = {});
double sfr_edge_ccdf(double t, const NetworkConfig& net,
                     const quad::QuadPolicy& policy = {});

// The no-FFR baseline: the user stays on the shared band and simply draws a
// fresh schedule slot, so this is the SFR expression with beta = delta = 1.
double universal_edge_ccdf(double t, const NetworkConfig& net,
                           const quad::QuadPolicy& policy = {});

// Quadrature-free evaluation, only valid for alpha == 4 and sigma2 == 0
// (throws Error(unsupported) otherwise). Agrees with the quadrature path to
// ~1e-9 absolute; the joint-kernel cross term falls back to quadrature in a
// narrow window around t == T1 where its closed form loses precision.
double strict_ffr_edge_ccdf_fast(double t, const NetworkConfig& net);
double sfr_edge_ccdf_fast(double t, const NetworkConfig& net);

// Probability of the conditioning event (shared-band SINR < T1); shared by
// both schemes' denominators. Throws Error(degenerate_conditioning) when it
// is numerically zero.
double conditioning_probability(ReuseScheme scheme, const NetworkConfig& net,
                                const quad::QuadPolicy& policy = {});

// Evaluate a whole curve. scheme == universal yields the unconditional
// shared-band coverage; strict_ffr / sfr yield edge-user curves, dispatching
// to the closed forms when alpha == 4 and sigma2 == 0.
CcdfCurve ccdf_curve(ReuseScheme scheme, const NetworkConfig& net,
                     const ThresholdGrid& grid,
                     const quad::QuadPolicy& policy = {});

// Same contract but forcing the quadrature path (used to validate the fast
// forms against the canonical ones).
CcdfCurve ccdf_curve_quadrature(ReuseScheme scheme, const NetworkConfig& net,
                                const ThresholdGrid& grid,
                                const quad::QuadPolicy& policy = {});

}  // namespace hffr::closed
