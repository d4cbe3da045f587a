#pragma once

#include "hffr/quadrature.hpp"

namespace hffr::kernels {

// Interference kernels shared by the coverage expressions. The *_closed
// family is normalized to a unit serving radius (results multiply
// pi * lambda * r^2 terms inside the coverage integrands); the *_open family
// keeps absolute area units with the serving radius r_a and the interferer
// exclusion radius r_b explicit.
//
// All kernels reduce the interferer Laplace transform to a single radial
// integral and are written in forms without subtractive cancellation, so
// they stay accurate for extreme thresholds.

// rho(z, alpha) = z^(2/alpha) * Int_{z^(-2/alpha)}^inf du / (1 + u^(alpha/2)).
double rho(double z, double alpha, const quad::QuadPolicy& policy = {});

// Closed form sqrt(z) * atan(sqrt(z)), valid only for alpha == 4.
double rho_alpha4(double z);

// psi(z, alpha) = pi * z^(2/alpha) / (alpha * sin(2*pi/alpha)): the full
// (non-excluded) field variant of rho, used for cross-tier interference.
double psi(double z, double alpha);

// Joint kernel of the strict-FFR edge numerator: interference correlation
// between the original band (threshold t1) and the 1/delta-thinned reserved
// band (threshold t).
double xi_closed(double t, double t1, double alpha, int delta,
                 const quad::QuadPolicy& policy = {});

// Joint kernel of the SFR edge numerator; a = eta * t1 and b = (eta/beta) * t
// are the effective thresholds on the two bands.
double zeta_closed(double t, double t1, double alpha, double beta, double eta,
                   const quad::QuadPolicy& policy = {});

// alpha == 4 closed forms of the joint kernels. Their shared cross term has
// a removable singularity at equal effective thresholds, where these
// dispatch to the quadrature evaluator instead of differencing.
double xi_closed_alpha4(double t, double t1, int delta);
double zeta_closed_alpha4(double t, double t1, double beta, double eta);

// Open-access kernels in absolute units. rho_open integrates the field of
// one tier outside radius r_b as seen from a server at distance r_a:
//   rho_open(z, alpha, r_a, r_b) = Int_{r_b}^inf w/(1+w) * x dx,
//   w = z * r_a^alpha * x^(-alpha).
double rho_open(double z, double alpha, double r_a, double r_b,
                const quad::QuadPolicy& policy = {});

// Joint open-access kernels, same two-band structure as the closed variants
// with the thinned (xi) or boosted (zeta) reserved band. z is the effective
// original-band threshold seen from the serving tier.
double xi_open(double t, double z, double alpha, int delta, double r_a,
               double r_b, const quad::QuadPolicy& policy = {});
double zeta_open(double t, double z, double alpha, double beta, double eta,
                 double r_a, double r_b, const quad::QuadPolicy& policy = {});

// Selection weights deciding which tier's threshold binds an open-access
// user at radii (r1, r2).
struct EpsilonWeights {
  double eps1 = 0.0;
  double eps2 = 0.0;
};

// eps1 = 1 / (1 + t1 * gamma * q) and eps2 = 1 / (1 + (t2 / gamma) / q) with
// q = (r1 / r2)^alpha; they sum to 1 exactly when t1 * t2 == 1.
EpsilonWeights epsilon_weights(double t1, double t2, double gamma, double r1,
                               double r2, double alpha);

}  // namespace hffr::kernels
