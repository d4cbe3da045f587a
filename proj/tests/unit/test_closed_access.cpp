#include "hffr/closed_access.hpp"

#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "hffr/errors.hpp"
#include "hffr/model.hpp"

using namespace hffr;
using hffr_test::bundled_closed;
using hffr_test::noisy_two_tier;

namespace {
constexpr double kPinTol = 1e-10;

NetworkConfig single_tier() {
  NetworkConfig net;
  net.tiers = {{1.0, 1.0, 1.0}};
  net.alpha = 4.0;
  net.delta = 3;
  return net;
}
}  // namespace

TEST_CASE("single-tier shared-band coverage closed form") {
  // Interference-limited universal reuse: 1 / (1 + rho(T)).
  auto net = single_tier();
  net.delta = 1;
  CHECK(closed::universal_coverage_multitier(1.0, net) ==
        doctest::Approx(1.0 / (1.0 + M_PI / 4.0)).epsilon(1e-9));
}

TEST_CASE("two-tier shared-band coverage worked example") {
  // kappa = 4, gamma = 0.1 at T = 1: 1 / (1 + pi/4 + 2*4*(pi/4)*sqrt(0.1)).
  NetworkConfig net;
  net.tiers = {{1.0, 1.0, 1.0}, {4.0, 0.1, 1.0}};
  net.alpha = 4.0;
  CHECK(closed::universal_coverage_multitier(1.0, net) ==
        doctest::Approx(0.265089151765).epsilon(kPinTol));
}

TEST_CASE("reuse-delta coverage worked example") {
  // Single tier, delta = 3, T = 1: 1 / (1 + rho(1)/3) = 1 / (1 + pi/12).
  CHECK(closed::reuse_delta_coverage(1.0, single_tier()) ==
        doctest::Approx(1.0 / (1.0 + M_PI / 12.0)).epsilon(1e-9));
  CHECK(closed::reuse_delta_coverage(1.0, single_tier()) ==
        doctest::Approx(0.792519008702).epsilon(1e-9));
}

TEST_CASE("conditioning probability on the bundled scenario") {
  const auto net = bundled_closed();
  CHECK(closed::conditioning_probability(ReuseScheme::strict_ffr, net) ==
        doctest::Approx(0.734419854848).epsilon(kPinTol));
  CHECK(closed::conditioning_probability(ReuseScheme::sfr, net) ==
        doctest::Approx(0.773748553848).epsilon(kPinTol));
}

TEST_CASE("strict FFR edge curve pins") {
  const auto net = bundled_closed();
  CHECK(closed::strict_ffr_edge_ccdf(db_to_linear(-10.0), net) ==
        doctest::Approx(0.959745264808).epsilon(kPinTol));
  CHECK(closed::strict_ffr_edge_ccdf(1.0, net) ==
        doctest::Approx(0.736277002798).epsilon(kPinTol));
  CHECK(closed::strict_ffr_edge_ccdf(10.0, net) ==
        doctest::Approx(0.307441968145).epsilon(kPinTol));
  CHECK(closed::strict_ffr_edge_ccdf(100.0, net) ==
        doctest::Approx(0.0687769411052).epsilon(kPinTol));
}

TEST_CASE("SFR edge curve pins") {
  const auto net = bundled_closed();
  CHECK(closed::sfr_edge_ccdf(0.1, net) ==
        doctest::Approx(0.715354280169).epsilon(kPinTol));
  CHECK(closed::sfr_edge_ccdf(1.0, net) ==
        doctest::Approx(0.341245212642).epsilon(kPinTol));
  CHECK(closed::sfr_edge_ccdf(10.0, net) ==
        doctest::Approx(0.0660811560922).epsilon(kPinTol));
  CHECK(closed::sfr_edge_ccdf(100.0, net) ==
        doctest::Approx(0.00710415710914).epsilon(kPinTol));
}

TEST_CASE("stay-on-band baseline pins and dominance") {
  const auto net = bundled_closed();
  CHECK(closed::universal_edge_ccdf(0.1, net) ==
        doctest::Approx(0.532968727433).epsilon(kPinTol));
  CHECK(closed::universal_edge_ccdf(1.0, net) ==
        doctest::Approx(0.172928142863).epsilon(kPinTol));
  CHECK(closed::universal_edge_ccdf(10.0, net) ==
        doctest::Approx(0.0245244251445).epsilon(kPinTol));
  CHECK(closed::universal_edge_ccdf(100.0, net) ==
        doctest::Approx(0.0025080724898).epsilon(kPinTol));

  // Reassigning the edge user to a protected band always beats redrawing a
  // slot on the shared band.
  for (double tdb = -10.0; tdb <= 20.0; tdb += 3.0) {
    const double t = db_to_linear(tdb);
    CHECK(closed::strict_ffr_edge_ccdf(t, net) >
          closed::universal_edge_ccdf(t, net));
  }
}

TEST_CASE("edge curves are monotone non-increasing in the threshold") {
  const auto net = bundled_closed();
  const ThresholdGrid grid{-10.0, 20.0, 2.0};
  for (auto scheme :
       {ReuseScheme::universal, ReuseScheme::strict_ffr, ReuseScheme::sfr}) {
    const auto curve = closed::ccdf_curve(scheme, net, grid);
    for (std::size_t i = 1; i < curve.values.size(); ++i)
      CHECK(curve.values[i] <= curve.values[i - 1] + 1e-12);
  }
}

TEST_CASE("degenerate limits of the strict curve") {
  const auto net = bundled_closed();
  // T -> 0: every edge user clears the bar.
  CHECK(closed::strict_ffr_edge_ccdf(0.0, net) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(closed::sfr_edge_ccdf(0.0, net) == doctest::Approx(1.0).epsilon(1e-9));
  // Far tail: decays toward zero (T^-1/2 scale at alpha = 4; the 1e9 point
  // is below 1e-6 while 1e6 is only ~1e-5).
  CHECK(closed::strict_ffr_edge_ccdf(1e6, net) < 2e-5);
  CHECK(closed::strict_ffr_edge_ccdf(1e9, net) < 1e-6);
}

TEST_CASE("fast paths match quadrature on the bundled grid") {
  const auto net = bundled_closed();
  const ThresholdGrid grid{-10.0, 20.0, 1.0};
  const auto fast_s = closed::ccdf_curve(ReuseScheme::strict_ffr, net, grid);
  const auto quad_s =
      closed::ccdf_curve_quadrature(ReuseScheme::strict_ffr, net, grid);
  const auto fast_f = closed::ccdf_curve(ReuseScheme::sfr, net, grid);
  const auto quad_f = closed::ccdf_curve_quadrature(ReuseScheme::sfr, net, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(std::fabs(fast_s.values[i] - quad_s.values[i]) < 1e-6);
    CHECK(std::fabs(fast_f.values[i] - quad_f.values[i]) < 1e-6);
  }
}

TEST_CASE("fast path refuses regimes it cannot represent") {
  auto net = bundled_closed();
  net.alpha = 3.5;
  try {
    closed::strict_ffr_edge_ccdf_fast(1.0, net);
    FAIL("expected unsupported");
  } catch (const Error& e) {
    CHECK(e.code() == errc::unsupported);
  }
  net = bundled_closed();
  net.sigma2 = 0.5;
  CHECK_THROWS_AS(closed::sfr_edge_ccdf_fast(1.0, net), Error);
}

TEST_CASE("noise regime pins (sigma2 = 1)") {
  const auto net = noisy_two_tier();
  CHECK(closed::conditioning_probability(ReuseScheme::strict_ffr, net) ==
        doctest::Approx(0.681497651584).epsilon(1e-9));
  CHECK(closed::conditioning_probability(ReuseScheme::sfr, net) ==
        doctest::Approx(0.73553491968).epsilon(1e-9));
  CHECK(closed::strict_ffr_edge_ccdf(1.0, net) ==
        doctest::Approx(0.6192961643).epsilon(1e-8));
  CHECK(closed::sfr_edge_ccdf(1.0, net) ==
        doctest::Approx(0.396802343301).epsilon(1e-8));
}

TEST_CASE("degenerate conditioning is reported, not divided by") {
  // Cross tiers keep the edge event alive even at tiny T1 (the psi terms
  // scale like sqrt(T1)), so collapse needs a single-tier network.
  auto net = bundled_closed();
  net.tiers = {net.tiers[0]};
  net.tiers[0].ffr_threshold = 1e-14;  // nobody is an edge user
  try {
    closed::strict_ffr_edge_ccdf(1.0, net);
    FAIL("expected degenerate_conditioning");
  } catch (const Error& e) {
    CHECK(e.code() == errc::degenerate_conditioning);
  }
}

TEST_CASE("tiny conditioning probabilities keep relative accuracy") {
  // P(SINR < T1) ~ rho(T1) for small T1; the expm1-based denominator must
  // not collapse to 0 or lose digits to cancellation.
  auto net = bundled_closed();
  net.tiers = {net.tiers[0]};
  net.tiers[0].ffr_threshold = 1e-8;
  const double d = closed::conditioning_probability(ReuseScheme::strict_ffr, net);
  // rho(z, 4) ~ z for small z.
  CHECK(d == doctest::Approx(1e-8).epsilon(1e-4));
}

TEST_CASE("curve evaluation stores one value and warning slot per point") {
  const auto net = bundled_closed();
  const ThresholdGrid grid{0.0, 5.0, 1.0};
  const auto curve = closed::ccdf_curve(ReuseScheme::strict_ffr, net, grid);
  CHECK(curve.values.size() == 6);
  CHECK(curve.warnings.size() == 6);
  CHECK(curve.scheme == ReuseScheme::strict_ffr);
  CHECK(curve.access == AccessMode::closed);
  for (const auto& w : curve.warnings) CHECK(w.empty());
}
