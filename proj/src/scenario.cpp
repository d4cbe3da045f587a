#include "hffr/scenario.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "hffr/errors.hpp"
#include "json.hpp"

namespace hffr::scenario {

namespace {

using nlohmann::json;

[[noreturn]] void schema_fail(const std::string& path, const std::string& what) {
  fail(errc::schema, path + ": " + what);
}

void require_object(const json& j, const std::string& path) {
  if (!j.is_object()) schema_fail(path, "must be an object");
}

// Typo protection: a scenario with "denisty" must fail loudly, not silently
// run with a default.
void reject_unknown(const json& j, const std::string& path,
                    const std::set<std::string>& known) {
  for (const auto& [key, _] : j.items())
    if (!known.count(key)) schema_fail(path + "." + key, "unknown key");
}

const json& require_key(const json& j, const std::string& path,
                        const std::string& key) {
  auto it = j.find(key);
  if (it == j.end()) schema_fail(path + "." + key, "missing required key");
  return *it;
}

double get_number(const json& j, const std::string& path) {
  if (!j.is_number()) schema_fail(path, "must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) schema_fail(path, "must be finite");
  return v;
}

double get_positive(const json& j, const std::string& path) {
  const double v = get_number(j, path);
  if (!(v > 0.0)) schema_fail(path, "must be positive");
  return v;
}

long get_integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) schema_fail(path, "must be an integer");
  return j.get<long>();
}

std::string get_string(const json& j, const std::string& path) {
  if (!j.is_string()) schema_fail(path, "must be a string");
  return j.get<std::string>();
}

ReuseScheme parse_scheme(const json& j, const std::string& path) {
  const std::string s = get_string(j, path);
  if (s == "universal") return ReuseScheme::universal;
  if (s == "strict_ffr") return ReuseScheme::strict_ffr;
  if (s == "sfr") return ReuseScheme::sfr;
  schema_fail(path, "must be one of \"universal\", \"strict_ffr\", \"sfr\"");
}

AccessMode parse_access(const json& j, const std::string& path) {
  const std::string s = get_string(j, path);
  if (s == "closed") return AccessMode::closed;
  if (s == "open") return AccessMode::open;
  schema_fail(path, "must be \"closed\" or \"open\"");
}

TierConfig parse_tier(const json& j, const std::string& path) {
  require_object(j, path);
  reject_unknown(j, path, {"density", "power", "ffr_threshold_db"});
  TierConfig tier;
  tier.density = get_positive(require_key(j, path, "density"), path + ".density");
  tier.power = get_positive(require_key(j, path, "power"), path + ".power");
  tier.ffr_threshold = db_to_linear(
      get_number(require_key(j, path, "ffr_threshold_db"), path + ".ffr_threshold_db"));
  return tier;
}

ThresholdGrid parse_grid(const json& j, const std::string& path) {
  require_object(j, path);
  reject_unknown(j, path, {"start_db", "stop_db", "step_db"});
  ThresholdGrid grid;
  grid.start_db = get_number(require_key(j, path, "start_db"), path + ".start_db");
  grid.stop_db = get_number(require_key(j, path, "stop_db"), path + ".stop_db");
  grid.step_db = get_positive(require_key(j, path, "step_db"), path + ".step_db");
  if (grid.stop_db < grid.start_db)
    schema_fail(path + ".stop_db", "must be >= start_db");
  return grid;
}

mc::McConfig parse_mc(const json& j, const std::string& path) {
  require_object(j, path);
  reject_unknown(j, path, {"drops", "seed", "region_radius"});
  mc::McConfig cfg;
  const long drops = get_integer(require_key(j, path, "drops"), path + ".drops");
  if (drops < 1) schema_fail(path + ".drops", "must be >= 1");
  cfg.drops = drops;
  const long seed = get_integer(require_key(j, path, "seed"), path + ".seed");
  if (seed < 0) schema_fail(path + ".seed", "must be >= 0");
  cfg.seed = static_cast<std::uint64_t>(seed);
  if (auto it = j.find("region_radius"); it != j.end())
    cfg.region_radius = get_positive(*it, path + ".region_radius");
  return cfg;
}

}  // namespace

Scenario parse_scenario(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(errc::schema, std::string("$: not valid JSON (") + e.what() + ")");
  }
  require_object(j, "$");
  reject_unknown(j, "$",
                 {"tiers", "alpha", "noise", "delta", "beta", "scheme", "access",
                  "open_thresholds", "grid", "mc"});

  Scenario sc;
  sc.scheme = parse_scheme(require_key(j, "$", "scheme"), "$.scheme");
  sc.access = parse_access(require_key(j, "$", "access"), "$.access");

  const json& tiers = require_key(j, "$", "tiers");
  if (!tiers.is_array() || tiers.empty())
    schema_fail("$.tiers", "must be a non-empty array");
  for (std::size_t i = 0; i < tiers.size(); ++i)
    sc.net.tiers.push_back(
        parse_tier(tiers[i], "$.tiers[" + std::to_string(i) + "]"));

  sc.net.alpha = get_number(require_key(j, "$", "alpha"), "$.alpha");
  if (!(sc.net.alpha > 2.0)) schema_fail("$.alpha", "must be > 2");
  sc.net.sigma2 = get_number(require_key(j, "$", "noise"), "$.noise");
  if (sc.net.sigma2 < 0.0) schema_fail("$.noise", "must be >= 0");
  const long delta = get_integer(require_key(j, "$", "delta"), "$.delta");
  if (delta < 1) schema_fail("$.delta", "must be >= 1");
  sc.net.delta = static_cast<int>(delta);
  if (auto it = j.find("beta"); it != j.end()) {
    sc.net.beta = get_number(*it, "$.beta");
    if (!(sc.net.beta >= 1.0)) schema_fail("$.beta", "must be >= 1");
  } else if (sc.scheme == ReuseScheme::sfr) {
    schema_fail("$.beta", "missing required key (scheme is \"sfr\")");
  } else {
    sc.net.beta = 1.0;
  }

  sc.grid = parse_grid(require_key(j, "$", "grid"), "$.grid");
  if (auto it = j.find("mc"); it != j.end()) sc.mc = parse_mc(*it, "$.mc");

  if (sc.access == AccessMode::open) {
    const json& ot = require_key(j, "$", "open_thresholds");
    require_object(ot, "$.open_thresholds");
    reject_unknown(ot, "$.open_thresholds", {"t1_db", "t2_db"});
    open::OpenScenario os;
    os.net = sc.net;
    os.t1 = db_to_linear(
        get_number(require_key(ot, "$.open_thresholds", "t1_db"),
                   "$.open_thresholds.t1_db"));
    os.t2 = db_to_linear(
        get_number(require_key(ot, "$.open_thresholds", "t2_db"),
                   "$.open_thresholds.t2_db"));
    sc.open_scen = std::move(os);
  } else if (j.count("open_thresholds")) {
    schema_fail("$.open_thresholds", "only valid when access is \"open\"");
  }

  // Semantic validation beyond field shapes, routed through the same code
  // the library applies internally.
  try {
    sc.net.validate();
    sc.grid.validate();
    if (sc.open_scen) sc.open_scen->validate();
  } catch (const Error& e) {
    fail(errc::schema, std::string("$: ") + e.what());
  }
  return sc;
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::schema, "$: cannot open scenario file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str());
}

SweepParam parse_sweep_param(const std::string& name) {
  if (name == "kappa_k" || name == "kappa") return SweepParam::kappa;
  if (name == "t2_db") return SweepParam::t2_db;
  if (name == "beta_db") return SweepParam::beta_db;
  if (name == "delta") return SweepParam::delta;
  if (name == "t_bias_db") return SweepParam::t_bias_db;
  fail(errc::invalid_argument,
       "unknown sweep parameter '" + name +
           "' (expected kappa_k, t2_db, beta_db, delta or t_bias_db)");
}

Scenario apply_sweep_value(const Scenario& base, SweepParam param, double value) {
  Scenario sc = base;
  switch (param) {
    case SweepParam::kappa:
      // Binds the first cross tier; scenarios with more tiers would make
      // the target ambiguous, so require exactly the documented shape.
      if (sc.net.num_tiers() < 2)
        fail(errc::invalid_argument, "kappa_k sweep needs at least two tiers");
      if (!(value > 0.0))
        fail(errc::invalid_argument, "kappa_k sweep values must be positive");
      sc.net.tiers[1].density = value * sc.net.tiers[0].density;
      break;
    case SweepParam::t2_db:
      if (!sc.open_scen)
        fail(errc::invalid_argument, "t2_db sweep requires an open-access scenario");
      sc.open_scen->t2 = db_to_linear(value);
      break;
    case SweepParam::beta_db:
      sc.net.beta = db_to_linear(value);
      if (!(sc.net.beta >= 1.0))
        fail(errc::invalid_argument, "beta_db sweep values must be >= 0 dB");
      break;
    case SweepParam::delta: {
      const double r = std::round(value);
      if (!(std::fabs(value - r) < 1e-9) || r < 1.0)
        fail(errc::invalid_argument, "delta sweep values must be integers >= 1");
      sc.net.delta = static_cast<int>(r);
      break;
    }
    case SweepParam::t_bias_db:
      if (!sc.open_scen)
        fail(errc::invalid_argument,
             "t_bias_db sweep requires an open-access scenario");
      *sc.open_scen = open::apply_bias(*sc.open_scen, value);
      break;
  }
  if (sc.open_scen) sc.open_scen->net = sc.net;
  sc.net.validate();
  return sc;
}

std::string scheme_name(ReuseScheme scheme) {
  switch (scheme) {
    case ReuseScheme::universal: return "universal";
    case ReuseScheme::strict_ffr: return "strict_ffr";
    case ReuseScheme::sfr: return "sfr";
  }
  return "unknown";
}

std::string access_name(AccessMode access) {
  return access == AccessMode::closed ? "closed" : "open";
}

}  // namespace hffr::scenario
