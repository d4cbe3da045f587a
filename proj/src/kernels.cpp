#include "hffr/kernels.hpp"

#include <cmath>
#include <string>

#include "hffr/errors.hpp"

namespace hffr::kernels {

namespace {

void check_threshold(double z, const char* name) {
  if (!(std::isfinite(z) && z >= 0.0))
    fail(errc::invalid_argument, std::string(name) + " must be a non-negative finite threshold");
}

void check_alpha(double alpha) {
  if (!(std::isfinite(alpha) && alpha > 2.0))
    fail(errc::invalid_alpha,
         "pathloss exponent must exceed 2, got " + std::to_string(alpha));
}

void check_radius(double r, const char* name) {
  if (!(std::isfinite(r) && r > 0.0))
    fail(errc::invalid_argument, std::string(name) + " must be a positive radius");
}

// Every kernel reduces (via x -> 1/s on the radial axis) to
//   Int_0^1 [ a s^(alpha-3) / (1 + a s^alpha)
//             + c * b s^(alpha-3) / ((1 + a s^alpha)(1 + b s^alpha)) ] ds.
// The form is additive, so there is no cancellation anywhere, and the only
// awkward behavior is the integrable s^(alpha-3) endpoint for alpha < 3,
// which the adaptive subdivision absorbs.
double two_band_integral(double a, double b, double c, double alpha,
                         const quad::QuadPolicy& policy) {
  if (a == 0.0 && (b == 0.0 || c == 0.0)) return 0.0;
  auto f = [a, b, c, alpha](double s) {
    const double sa = std::pow(s, alpha - 3.0);
    const double sp = sa * s * s * s;  // s^alpha without a second pow
    const double da = 1.0 + a * sp;
    double v = a * sa / da;
    if (c != 0.0 && b != 0.0) v += c * b * sa / (da * (1.0 + b * sp));
    return v;
  };
  return quad::integrate_finite(f, 0.0, 1.0, policy).value;
}

// atan-based cross term shared by the alpha == 4 closed forms:
//   (1/2) Int_{c}^inf a*b / ((v^2 + a)(v^2 + b)) dv
// by partial fractions; the caller guards the a == b removable singularity.
double cross_term_alpha4(double a, double b, double c) {
  if (a == 0.0 || b == 0.0) return 0.0;
  const double sa = std::sqrt(a);
  const double sb = std::sqrt(b);
  return 0.5 * (a * b / (b - a)) *
         (std::atan(sa / c) / sa - std::atan(sb / c) / sb);
}

// The closed-form cross term differences two nearby atan expressions when
// its two effective thresholds nearly coincide; inside this window the fast
// paths defer to quadrature instead.
bool nearly_equal_thresholds(double a, double b) {
  return std::fabs(a - b) <= 1e-6 * std::max({a, b, 1.0});
}

}  // namespace

double rho(double z, double alpha, const quad::QuadPolicy& policy) {
  check_threshold(z, "z");
  check_alpha(alpha);
  return 2.0 * two_band_integral(z, 0.0, 0.0, alpha, policy);
}

double rho_alpha4(double z) {
  check_threshold(z, "z");
  const double s = std::sqrt(z);
  return s * std::atan(s);
}

double psi(double z, double alpha) {
  check_threshold(z, "z");
  check_alpha(alpha);
  if (z == 0.0) return 0.0;
  const double pi = 3.14159265358979323846;
  return pi * std::pow(z, 2.0 / alpha) / (alpha * std::sin(2.0 * pi / alpha));
}

double xi_closed(double t, double t1, double alpha, int delta,
                 const quad::QuadPolicy& policy) {
  check_threshold(t, "t");
  check_threshold(t1, "t1");
  check_alpha(alpha);
  if (delta < 1) fail(errc::invalid_argument, "delta must be at least 1");
  return two_band_integral(t1, t, 1.0 / static_cast<double>(delta), alpha, policy);
}

double zeta_closed(double t, double t1, double alpha, double beta, double eta,
                   const quad::QuadPolicy& policy) {
  check_threshold(t, "t");
  check_threshold(t1, "t1");
  check_alpha(alpha);
  if (!(beta >= 1.0)) fail(errc::invalid_argument, "beta must be at least 1");
  if (!(eta > 0.0)) fail(errc::invalid_argument, "eta must be positive");
  return two_band_integral(eta * t1, (eta / beta) * t, 1.0, alpha, policy);
}

double xi_closed_alpha4(double t, double t1, int delta) {
  check_threshold(t, "t");
  check_threshold(t1, "t1");
  if (delta < 1) fail(errc::invalid_argument, "delta must be at least 1");
  if (nearly_equal_thresholds(t, t1)) return xi_closed(t, t1, 4.0, delta);
  const double cross = cross_term_alpha4(t1, t, 1.0);
  return 0.5 * rho_alpha4(t1) +
         (0.5 * rho_alpha4(t) - cross) / static_cast<double>(delta);
}

double zeta_closed_alpha4(double t, double t1, double beta, double eta) {
  check_threshold(t, "t");
  check_threshold(t1, "t1");
  if (!(beta >= 1.0)) fail(errc::invalid_argument, "beta must be at least 1");
  if (!(eta > 0.0)) fail(errc::invalid_argument, "eta must be positive");
  const double a = eta * t1;
  const double b = (eta / beta) * t;
  if (nearly_equal_thresholds(a, b)) return zeta_closed(t, t1, 4.0, beta, eta);
  return 0.5 * rho_alpha4(a) + 0.5 * rho_alpha4(b) - cross_term_alpha4(a, b, 1.0);
}

double rho_open(double z, double alpha, double r_a, double r_b,
                const quad::QuadPolicy& policy) {
  check_threshold(z, "z");
  check_alpha(alpha);
  check_radius(r_a, "r_a");
  check_radius(r_b, "r_b");
  const double zeff = z * std::pow(r_a / r_b, alpha);
  return r_b * r_b * two_band_integral(zeff, 0.0, 0.0, alpha, policy);
}

double xi_open(double t, double z, double alpha, int delta, double r_a,
               double r_b, const quad::QuadPolicy& policy) {
  check_threshold(t, "t");
  check_threshold(z, "z");
  check_alpha(alpha);
  if (delta < 1) fail(errc::invalid_argument, "delta must be at least 1");
  check_radius(r_a, "r_a");
  check_radius(r_b, "r_b");
  // Original band seen from the server at r_a, reserved band always served
  // from r_b (the macro distance), interferers excluded inside r_b.
  const double zeff = z * std::pow(r_a / r_b, alpha);
  return r_b * r_b *
         two_band_integral(zeff, t, 1.0 / static_cast<double>(delta), alpha, policy);
}

double zeta_open(double t, double z, double alpha, double beta, double eta,
                 double r_a, double r_b, const quad::QuadPolicy& policy) {
  check_threshold(t, "t");
  check_threshold(z, "z");
  check_alpha(alpha);
  if (!(beta >= 1.0)) fail(errc::invalid_argument, "beta must be at least 1");
  if (!(eta > 0.0)) fail(errc::invalid_argument, "eta must be positive");
  check_radius(r_a, "r_a");
  check_radius(r_b, "r_b");
  const double zeff = eta * z * std::pow(r_a / r_b, alpha);
  return r_b * r_b * two_band_integral(zeff, (eta / beta) * t, 1.0, alpha, policy);
}

EpsilonWeights epsilon_weights(double t1, double t2, double gamma, double r1,
                               double r2, double alpha) {
  check_threshold(t1, "t1");
  check_threshold(t2, "t2");
  check_alpha(alpha);
  if (!(gamma > 0.0)) fail(errc::invalid_argument, "gamma must be positive");
  check_radius(r1, "r1");
  check_radius(r2, "r2");
  const double q = std::pow(r1 / r2, alpha);
  EpsilonWeights w;
  w.eps1 = 1.0 / (1.0 + t1 * gamma * q);
  w.eps2 = 1.0 / (1.0 + t2 / (gamma * q));
  return w;
}

}  // namespace hffr::kernels
