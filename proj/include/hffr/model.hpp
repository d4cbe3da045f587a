#pragma once

#include <cstddef>
#include <vector>

namespace hffr {

// Frequency reuse discipline on the downlink.
//   universal:  every cell uses the whole band, no edge band exists.
//   strict_ffr: edge users move to one of `delta` reserved sub-bands; a
//               reserved sub-band is reused by a 1/delta thinning of the
//               macro tier and by no other tier.
//   sfr:        every cell uses the whole band but boosts one sub-band by
//               `beta` for its own edge users, so edge users see full-density
//               interference at the reduced average power factor eta.
enum class ReuseScheme { universal, strict_ffr, sfr };

// Whether users may connect only to their own (macro) tier or to whichever
// tier currently offers the better signal.
enum class AccessMode { closed, open };

// One tier of access points: a stationary PPP with common transmit power.
// ffr_threshold is the linear SINR value below which a user of this tier is
// classified as an edge user.
struct TierConfig {
  double density = 1.0;
  double power = 1.0;
  double ffr_threshold = 1.0;
};

// Multi-tier downlink model. Tier 0 is the macro tier that operates FFR;
// further tiers contribute interference (closed access) or may also serve
// (open access). Fading is exponential with rate mu (unit mean for mu = 1).
struct NetworkConfig {
  std::vector<TierConfig> tiers;
  double alpha = 4.0;   // pathloss exponent, must exceed 2
  double sigma2 = 0.0;  // noise power at the user
  double mu = 1.0;      // fading rate
  int delta = 1;        // number of FFR sub-bands
  double beta = 1.0;    // SFR edge power boost

  std::size_t num_tiers() const { return tiers.size(); }
  double kappa(std::size_t k) const;  // density ratio lambda_k / lambda_0
  double gamma(std::size_t k) const;  // power ratio P_k / P_0

  // Throws Error(invalid_alpha) for alpha <= 2 and Error(invalid_argument)
  // for any other out-of-domain field.
  void validate() const;
};

// Per-band average interference power factor of an SFR cell: one of delta
// sub-bands carries beta * P, the rest carry P.
double eta(double beta, int delta);

double db_to_linear(double db);
double linear_to_db(double value);

// Inclusive evaluation grid of SINR thresholds, specified in dB.
struct ThresholdGrid {
  double start_db = -10.0;
  double stop_db = 20.0;
  double step_db = 1.0;

  std::size_t size() const;
  double at_db(std::size_t i) const;
  double at_linear(std::size_t i) const;
  bool same_as(const ThresholdGrid& other) const;
  void validate() const;
};

}  // namespace hffr
