#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "hffr/model.hpp"
#include "hffr/open_access.hpp"
#include "hffr/rng.hpp"

namespace hffr::mc {

struct McConfig {
  long drops = 20000;       // target number of conditioned (edge-user) drops
  long max_attempts = 0;    // 0: 64 * drops
  std::uint64_t seed = 1;
  long batch = 0;           // realizations per work unit; 0: drops / 50, min 500
  double region_radius = 0.0;  // truncation radius; 0: auto from density
  int threads = 0;          // 0: HETNET_FFR_THREADS env var, else hardware
};

// Empirical CCDF with per-point binomial standard errors. values[i] is the
// fraction of conditioned drops whose reserved-band SINR exceeded grid
// point i (for universal reuse: fraction of all drops, shared band).
struct EmpiricalCcdf {
  ThresholdGrid grid;
  std::vector<double> values;
  std::vector<double> stderrs;
  long n_conditioned = 0;
  long n_total = 0;
};

// One realization, exposed for tests. tier_distance holds the nearest-point
// distance per tier; edge_sinr is engaged only when the drop conditioned.
struct DropOutcome {
  double common_sinr = 0.0;
  std::optional<double> edge_sinr;
  std::vector<double> tier_distance;
  bool conditioned = false;
};

// Truncation radius giving an expected ~1000 points in the sparsest tier.
double auto_region_radius(const NetworkConfig& net);

// Homogeneous PPP on a disc of the given radius, as (x, y) pairs. This is
// the plain definition (Poisson count, uniform placement); the simulator
// itself samples distances ring-by-ring but must agree with this in law.
std::vector<std::array<double, 2>> sample_ppp(double lambda, double radius,
                                              rng::Stream& stream);

EmpiricalCcdf simulate_closed(ReuseScheme scheme, const NetworkConfig& net,
                              const ThresholdGrid& grid, const McConfig& mc);
EmpiricalCcdf simulate_open(ReuseScheme scheme, const open::OpenScenario& scen,
                            const ThresholdGrid& grid, const McConfig& mc);

// Strict FFR and the stay-on-band baseline evaluated on identical
// realizations (same points, same fades), preserving the per-drop coupling
// that makes the dominance comparison exact rather than statistical.
struct PairedCcdf {
  EmpiricalCcdf strict_ffr;
  EmpiricalCcdf universal_edge;
  long dominance_violations = 0;  // drops where strict edge SINR < baseline
};
PairedCcdf simulate_closed_paired(const NetworkConfig& net,
                                  const ThresholdGrid& grid, const McConfig& mc);

struct McRate {
  double nats = 0.0;
  double stderr_nats = 0.0;
  long n = 0;
};
McRate estimate_rate_closed(ReuseScheme scheme, const NetworkConfig& net,
                            const McConfig& mc);
McRate estimate_rate_open(ReuseScheme scheme, const open::OpenScenario& scen,
                          const McConfig& mc);

// Pointwise comparison of an analytic curve against a simulated one on the
// same grid (Error(grid_mismatch) otherwise).
struct CompareReport {
  std::vector<double> abs_diff;
  std::vector<double> z_score;
  double max_abs_diff = 0.0;
  double frac_within_3sigma = 1.0;
};
CompareReport compare_curves(const closed::CcdfCurve& analytic,
                             const EmpiricalCcdf& simulated);

// Deterministic single-realization hook for tests.
DropOutcome run_single_drop(ReuseScheme scheme, const NetworkConfig& net,
                            const McConfig& mc, long index);

}  // namespace hffr::mc
