#include "hffr/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "hffr/errors.hpp"

namespace hffr::quad {

namespace {

// 15-point Kronrod abscissae on [-1, 1] (positive half) and weights, with
// the embedded 7-point Gauss weights on the odd-indexed nodes. Standard
// QUADPACK dqk15 constants.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Segment {
  double a = 0.0;
  double b = 0.0;
  double value = 0.0;
  double error = 0.0;
};

// One Gauss-Kronrod 7/15 pass over [a, b]. The error estimate follows
// QUADPACK: the raw Gauss/Kronrod difference is sharpened through the
// integrand's mean absolute deviation so smooth integrands are not
// over-refined.
Segment evaluate_segment(const Integrand& f, double a, double b, long* evaluations) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double fc = f(center);
  double result_gauss = kWg[3] * fc;
  double result_kronrod = kWgk[7] * fc;
  double result_abs = kWgk[7] * std::fabs(fc);
  double fv1[7], fv2[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    fv1[j] = f(center - dx);
    fv2[j] = f(center + dx);
    const double sum = fv1[j] + fv2[j];
    result_kronrod += kWgk[j] * sum;
    result_abs += kWgk[j] * (std::fabs(fv1[j]) + std::fabs(fv2[j]));
    if (j % 2 == 1) result_gauss += kWg[(j - 1) / 2] * sum;
  }
  *evaluations += 15;

  const double mean = result_kronrod * 0.5;
  double result_asc = kWgk[7] * std::fabs(fc - mean);
  for (int j = 0; j < 7; ++j)
    result_asc += kWgk[j] * (std::fabs(fv1[j] - mean) + std::fabs(fv2[j] - mean));

  Segment seg;
  seg.a = a;
  seg.b = b;
  seg.value = result_kronrod * half;
  result_abs *= std::fabs(half);
  result_asc *= std::fabs(half);

  double err = std::fabs((result_kronrod - result_gauss) * half);
  if (result_asc != 0.0 && err != 0.0)
    err = result_asc * std::min(1.0, std::pow(200.0 * err / result_asc, 1.5));
  const double eps = std::numeric_limits<double>::epsilon();
  const double tiny = std::numeric_limits<double>::min();
  if (result_abs > tiny / (50.0 * eps)) err = std::max(err, 50.0 * eps * result_abs);
  seg.error = err;

  if (std::isnan(seg.value))
    fail(errc::evaluation, "integrand produced NaN on [" + std::to_string(a) + ", " +
                               std::to_string(b) + "]");
  return seg;
}

}  // namespace

QuadResult integrate_finite(const Integrand& f, double a, double b,
                            const QuadPolicy& policy) {
  if (!(std::isfinite(a) && std::isfinite(b)))
    fail(errc::invalid_argument, "finite integration needs finite bounds");
  if (a > b) fail(errc::invalid_argument, "integration bounds out of order");
  QuadResult res;
  if (a == b) return res;

  std::vector<Segment> segments;
  segments.push_back(evaluate_segment(f, a, b, &res.evaluations));

  double total_value = segments[0].value;
  double total_error = segments[0].error;
  int splits = 0;
  while (total_error > std::max(policy.abs_tol, policy.rel_tol * std::fabs(total_value))) {
    if (splits >= policy.max_subdivisions) {
      res.converged = false;
      break;
    }
    // Split the worst segment; ties break on the left endpoint so the
    // refinement order (and thus the result, bit for bit) is deterministic.
    std::size_t worst = 0;
    for (std::size_t i = 1; i < segments.size(); ++i) {
      if (segments[i].error > segments[worst].error ||
          (segments[i].error == segments[worst].error && segments[i].a < segments[worst].a))
        worst = i;
    }
    const Segment old = segments[worst];
    const double mid = 0.5 * (old.a + old.b);
    if (mid <= old.a || mid >= old.b) break;  // interval exhausted to ulp width
    const Segment left = evaluate_segment(f, old.a, mid, &res.evaluations);
    const Segment right = evaluate_segment(f, mid, old.b, &res.evaluations);
    segments[worst] = left;
    segments.push_back(right);
    total_value += left.value + right.value - old.value;
    total_error += left.error + right.error - old.error;
    ++splits;
  }

  // Re-sum left to right: the incremental total above accumulates rounding
  // from cancellation; a single ordered pass is cleaner and deterministic.
  std::sort(segments.begin(), segments.end(),
            [](const Segment& x, const Segment& y) { return x.a < y.a; });
  res.value = 0.0;
  res.error_estimate = 0.0;
  for (const auto& s : segments) {
    res.value += s.value;
    res.error_estimate += s.error;
  }
  return res;
}

QuadResult integrate_semi_inf(const Integrand& f, double lower,
                              const QuadPolicy& policy) {
  if (!std::isfinite(lower))
    fail(errc::invalid_argument, "semi-infinite integration needs a finite lower bound");
  // x = lower + t/(1-t) maps [0,1) onto [lower, inf); dx = dt/(1-t)^2. The
  // quadrature never evaluates interval endpoints, so t = 1 is safe.
  auto g = [&f, lower](double t) {
    const double om = 1.0 - t;
    const double x = lower + t / om;
    return f(x) / (om * om);
  };
  return integrate_finite(g, 0.0, 1.0, policy);
}

namespace {

// Shared nesting logic: the outer integral runs at a floor of 1e-7 relative
// tolerance because each of its evaluations already carries inner error.
QuadResult nest_2d(const Integrand2D& f, double x_lo, double x_hi, bool x_infinite,
                   double y_lo, double y_hi, bool y_infinite,
                   const QuadPolicy& policy) {
  QuadPolicy outer = policy;
  outer.rel_tol = std::max(policy.rel_tol, 1e-7);
  outer.abs_tol = std::max(policy.abs_tol, 1e-11);

  long inner_evals = 0;
  double inner_error = 0.0;
  bool inner_converged = true;
  auto outer_f = [&](double x) {
    auto inner_f = [&f, x](double y) { return f(x, y); };
    QuadResult r = y_infinite ? integrate_semi_inf(inner_f, y_lo, policy)
                              : integrate_finite(inner_f, y_lo, y_hi, policy);
    inner_evals += r.evaluations;
    inner_error = std::max(inner_error, r.error_estimate);
    inner_converged = inner_converged && r.converged;
    return r.value;
  };

  QuadResult res = x_infinite ? integrate_semi_inf(outer_f, x_lo, outer)
                              : integrate_finite(outer_f, x_lo, x_hi, outer);
  res.evaluations += inner_evals;
  // Worst inner error enters scaled by the outer measure it multiplies.
  const double width = x_infinite ? 1.0 : (x_hi - x_lo);
  res.error_estimate += inner_error * std::max(width, 1.0);
  res.converged = res.converged && inner_converged;
  return res;
}

}  // namespace

QuadResult integrate_2d_finite(const Integrand2D& f, double x_lo, double x_hi,
                               double y_lo, double y_hi, const QuadPolicy& policy) {
  return nest_2d(f, x_lo, x_hi, false, y_lo, y_hi, false, policy);
}

QuadResult integrate_2d_semi_inf(const Integrand2D& f, double x_lo, double y_lo,
                                 const QuadPolicy& policy) {
  return nest_2d(f, x_lo, 0.0, true, y_lo, 0.0, true, policy);
}

}  // namespace hffr::quad
