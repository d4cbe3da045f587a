#pragma once

#include "hffr/model.hpp"
#include "hffr/open_access.hpp"

namespace hffr_test {

// The bundled three-tier closed-access network: macro density 1, density
// ratios (2, 4), power ratios (0.1, 0.01), alpha 4, no noise, delta 3,
// beta 4, T1 = 1 dB.
inline hffr::NetworkConfig bundled_closed() {
  hffr::NetworkConfig net;
  const double t1 = hffr::db_to_linear(1.0);
  net.tiers = {{1.0, 1.0, t1}, {2.0, 0.1, t1}, {4.0, 0.01, t1}};
  net.alpha = 4.0;
  net.sigma2 = 0.0;
  net.delta = 3;
  net.beta = 4.0;
  return net;
}

// The bundled two-tier open-access scenario: density ratio 4, power ratio
// 0.1, T1 = 1 dB, T2 = 5 dB.
inline hffr::open::OpenScenario bundled_open() {
  hffr::open::OpenScenario scen;
  scen.net.tiers = {{1.0, 1.0, hffr::db_to_linear(1.0)},
                    {4.0, 0.1, hffr::db_to_linear(5.0)}};
  scen.net.alpha = 4.0;
  scen.net.sigma2 = 0.0;
  scen.net.delta = 3;
  scen.net.beta = 4.0;
  scen.t1 = hffr::db_to_linear(1.0);
  scen.t2 = hffr::db_to_linear(5.0);
  return scen;
}

// Two-tier noisy variant used to exercise the sigma2 > 0 quadrature paths.
inline hffr::NetworkConfig noisy_two_tier() {
  hffr::NetworkConfig net;
  const double t1 = hffr::db_to_linear(1.0);
  net.tiers = {{1.0, 1.0, t1}, {2.0, 0.1, t1}};
  net.alpha = 4.0;
  net.sigma2 = 1.0;
  net.delta = 3;
  net.beta = 4.0;
  return net;
}

}  // namespace hffr_test
