#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hffr/model.hpp"
#include "hffr/montecarlo.hpp"
#include "hffr/open_access.hpp"

namespace hffr::scenario {

// A fully described experiment: network, scheme, threshold grid, simulation
// budget. Loaded from JSON with strict validation (unknown keys rejected to
// catch typos like "denisty").
struct Scenario {
  NetworkConfig net;
  ReuseScheme scheme = ReuseScheme::strict_ffr;
  AccessMode access = AccessMode::closed;
  std::optional<open::OpenScenario> open_scen;  // engaged iff access == open
  ThresholdGrid grid;
  mc::McConfig mc;
};

Scenario load_scenario_file(const std::string& path);
Scenario parse_scenario(const std::string& json_text);

// Parameters a sweep may vary. kappa binds the tier-2/tier-1 density ratio
// (scenarios need at least two tiers); t2_db and t_bias_db require open
// access; beta_db values are in dB and must map to beta >= 1.
enum class SweepParam { kappa, t2_db, beta_db, delta, t_bias_db };

SweepParam parse_sweep_param(const std::string& name);
Scenario apply_sweep_value(const Scenario& base, SweepParam param, double value);

std::string scheme_name(ReuseScheme scheme);
std::string access_name(AccessMode access);

}  // namespace hffr::scenario
