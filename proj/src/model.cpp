#include "hffr/model.hpp"

#include <cmath>
#include <string>

#include "hffr/errors.hpp"

namespace hffr {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) fail(errc::invalid_argument, what);
}

}  // namespace

double NetworkConfig::kappa(std::size_t k) const {
  if (k >= tiers.size()) fail(errc::invalid_argument, "tier index out of range");
  return tiers[k].density / tiers[0].density;
}

double NetworkConfig::gamma(std::size_t k) const {
  if (k >= tiers.size()) fail(errc::invalid_argument, "tier index out of range");
  return tiers[k].power / tiers[0].power;
}

void NetworkConfig::validate() const {
  require(!tiers.empty(), "network needs at least one tier");
  for (std::size_t k = 0; k < tiers.size(); ++k) {
    const auto& t = tiers[k];
    const std::string at = "tier " + std::to_string(k) + ": ";
    require(std::isfinite(t.density) && t.density > 0.0, at + "density must be positive");
    require(std::isfinite(t.power) && t.power > 0.0, at + "power must be positive");
    require(std::isfinite(t.ffr_threshold) && t.ffr_threshold > 0.0,
            at + "ffr_threshold must be positive");
  }
  if (!(std::isfinite(alpha) && alpha > 2.0))
    fail(errc::invalid_alpha, "pathloss exponent must exceed 2, got " + std::to_string(alpha));
  require(std::isfinite(sigma2) && sigma2 >= 0.0, "noise power must be non-negative");
  require(std::isfinite(mu) && mu > 0.0, "fading rate must be positive");
  require(delta >= 1, "sub-band count delta must be at least 1");
  require(std::isfinite(beta) && beta >= 1.0, "power boost beta must be at least 1");
}

double eta(double beta, int delta) {
  if (!(std::isfinite(beta) && beta >= 1.0))
    fail(errc::invalid_argument, "power boost beta must be at least 1");
  if (delta < 1) fail(errc::invalid_argument, "sub-band count delta must be at least 1");
  return (static_cast<double>(delta) - 1.0 + beta) / static_cast<double>(delta);
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double value) {
  if (!(value > 0.0)) fail(errc::invalid_argument, "dB conversion needs a positive value");
  return 10.0 * std::log10(value);
}

std::size_t ThresholdGrid::size() const {
  if (step_db <= 0.0) return stop_db >= start_db ? 1 : 0;
  // Half-step slack keeps e.g. -10:20:1 at exactly 31 points despite
  // floating-point drift in stop - start.
  return static_cast<std::size_t>(std::floor((stop_db - start_db) / step_db + 0.5)) + 1;
}

double ThresholdGrid::at_db(std::size_t i) const {
  return start_db + step_db * static_cast<double>(i);
}

double ThresholdGrid::at_linear(std::size_t i) const { return db_to_linear(at_db(i)); }

bool ThresholdGrid::same_as(const ThresholdGrid& other) const {
  const double tol = 1e-12;
  return std::fabs(start_db - other.start_db) < tol &&
         std::fabs(stop_db - other.stop_db) < tol &&
         std::fabs(step_db - other.step_db) < tol;
}

void ThresholdGrid::validate() const {
  require(std::isfinite(start_db) && std::isfinite(stop_db) && std::isfinite(step_db),
          "grid bounds must be finite");
  require(stop_db >= start_db, "grid stop_db must not precede start_db");
  require(step_db > 0.0 || stop_db == start_db, "grid step_db must be positive");
}

}  // namespace hffr
