#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "hffr/model.hpp"
#include "hffr/open_access.hpp"
#include "hffr/quadrature.hpp"

namespace hffr::rate {

struct RateResult {
  double nats = 0.0;  // mean spectral efficiency in nats/s/Hz
  ReuseScheme scheme = ReuseScheme::universal;
  AccessMode access = AccessMode::closed;
  std::vector<std::string> warnings;

  double bits() const { return nats / std::log(2.0); }
};

// Mean of ln(1 + SINR) from a coverage function via the tail identity
// E[ln(1+S)] = Int_0^inf P(ln(1+S) > t) dt. The upper limit is found by
// doubling from t = 1 until the tail falls below 1e-8.
RateResult average_rate_from_ccdf(const std::function<double(double)>& ccdf,
                                  const quad::QuadPolicy& policy = {});

// Average rate of the scheme's edge user (or of a generic user for
// universal reuse).
RateResult average_edge_rate(ReuseScheme scheme, const NetworkConfig& net,
                             const quad::QuadPolicy& policy = {});
RateResult average_edge_rate(ReuseScheme scheme, const open::OpenScenario& scen,
                             const quad::QuadPolicy& policy = {});

}  // namespace hffr::rate
