#pragma once

#include <functional>

namespace hffr::quad {

struct QuadPolicy {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  int max_subdivisions = 2000;
};

// Result of an adaptive integration. `converged` is false when the
// subdivision budget ran out before the tolerance was met; the value is
// still the best available estimate and error_estimate bounds the residual.
struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
  bool converged = true;
};

using Integrand = std::function<double(double)>;
using Integrand2D = std::function<double(double, double)>;

// Adaptive Gauss-Kronrod 7/15 over [a, b], globally refining the interval
// with the largest error estimate first. Deterministic: identical inputs
// produce bit-identical results. Throws Error(evaluation) if the integrand
// returns NaN.
QuadResult integrate_finite(const Integrand& f, double a, double b,
                            const QuadPolicy& policy = {});

// Integral over [lower, inf) via the substitution x = lower + t / (1 - t),
// which maps to t in [0, 1). The integrand must decay fast enough for the
// transformed integrand to vanish as t -> 1 (true of every kernel here).
QuadResult integrate_semi_inf(const Integrand& f, double lower,
                              const QuadPolicy& policy = {});

// Nested 2D integration, inner along y. The outer pass runs at a relaxed
// tolerance (at least 1e-7 relative) since each outer evaluation already
// carries inner truncation error; estimates from both levels are combined.
QuadResult integrate_2d_finite(const Integrand2D& f, double x_lo, double x_hi,
                               double y_lo, double y_hi,
                               const QuadPolicy& policy = {});

QuadResult integrate_2d_semi_inf(const Integrand2D& f, double x_lo, double y_lo,
                                 const QuadPolicy& policy = {});

}  // namespace hffr::quad
