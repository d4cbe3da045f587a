#include "hffr/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>
#include <thread>

#include "hffr/errors.hpp"

namespace hffr::mc {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Substream purposes. Every (realization, tier, ring, purpose) tuple gets an
// independent generator, which is what makes results reproducible regardless
// of thread count and lets bands consume different draw counts without
// desynchronizing each other.
enum Purpose : std::uint64_t {
  kPositions = 0,
  kFadeShared = 1,      // fades on the band the user starts on
  kFadeReserved = 2,    // fresh fades for the same points on the reserved band
  kThinning = 3,        // strict-FFR sub-band membership indicators
  kFreshPositions = 4,  // cross-tier points redrawn for the reserved band
  kFreshFades = 5,
};

std::uint64_t drop_seed(std::uint64_t seed, std::uint64_t index) {
  return rng::mix64(seed ^ (0xD1B54A32D192ED03ull * (index + 1)));
}

struct Rings {
  std::vector<double> lo2, hi2, area;
};

// Annuli with doubling outer radii anchored at the auto radius: enlarging
// the region to the next boundary appends rings without touching the draws
// of inner ones, so truncation effects can be measured without MC noise.
Rings make_rings(double anchor, double target) {
  Rings rings;
  double lo = 0.0;
  double hi = anchor;
  for (;;) {
    const double outer = std::min(hi, target);
    rings.lo2.push_back(lo * lo);
    rings.hi2.push_back(outer * outer);
    rings.area.push_back(kPi * (outer * outer - lo * lo));
    if (outer >= target) break;
    lo = hi;
    hi *= 2.0;
  }
  return rings;
}

struct Setup {
  NetworkConfig net;
  ReuseScheme scheme = ReuseScheme::strict_ffr;
  bool open = false;
  double t1 = 1.0;
  double t2 = 1.0;  // open access only
  double eta_ = 1.0;
  double mu_mean = 1.0;
  bool alpha4 = false;
  double neg_half_alpha = -2.0;
  Rings rings;
  std::uint64_t seed = 1;

  double inv_pow(double r2) const {  // r^-alpha from the squared distance
    return alpha4 ? 1.0 / (r2 * r2) : std::pow(r2, neg_half_alpha);
  }
};

// Per-thread scratch; macro-tier points are kept because the reserved band
// reuses their positions with fresh fading.
struct Workspace {
  std::vector<double> macro_r2;
  std::vector<double> macro_idp;
  std::vector<std::size_t> ring_end;
};

struct Drop {
  bool valid = false;
  bool conditioned = false;
  double common = 0.0;
  double edge = 0.0;
  double baseline = 0.0;  // paired mode: stay-on-band fresh draw
};

Drop realize(const Setup& s, long index, Workspace& ws, bool paired,
             std::vector<double>* tier_distance) {
  const auto& net = s.net;
  const std::uint64_t ds = drop_seed(s.seed, static_cast<std::uint64_t>(index));
  const std::size_t ntiers = net.num_tiers();
  const std::size_t nrings = s.rings.lo2.size();
  Drop d;

  ws.macro_r2.clear();
  ws.macro_idp.clear();
  ws.ring_end.clear();
  if (tier_distance) tier_distance->assign(ntiers, kInf);

  // Shared band: every tier's field with its own fades; track the nearest
  // point of tier 0 (the server) and, for open access, of tier 1.
  double macro_sum = 0.0;
  double serve_r2 = kInf, serve_g = 0.0, serve_idp = 0.0;
  std::size_t serve_at = static_cast<std::size_t>(-1);
  double cross_sum = 0.0;
  double o2_r2 = kInf, o2_g = 0.0, o2_idp = 0.0;

  for (std::size_t k = 0; k < ntiers; ++k) {
    const double pk = net.tiers[k].power;
    const double lam = net.tiers[k].density;
    double tier_min = kInf;
    for (std::size_t ring = 0; ring < nrings; ++ring) {
      rng::Stream pos(ds, k, ring, kPositions);
      rng::Stream fad(ds, k, ring, kFadeShared);
      const std::uint64_t n = pos.next_poisson(lam * s.rings.area[ring]);
      const double lo2 = s.rings.lo2[ring];
      const double span = s.rings.hi2[ring] - lo2;
      for (std::uint64_t i = 0; i < n; ++i) {
        const double r2 = lo2 + span * pos.next_double();
        const double g = fad.next_exponential(s.mu_mean);
        const double idp = s.inv_pow(r2);
        if (k == 0) {
          macro_sum += g * idp;
          ws.macro_r2.push_back(r2);
          ws.macro_idp.push_back(idp);
          if (r2 < serve_r2) {
            serve_r2 = r2;
            serve_g = g;
            serve_idp = idp;
            serve_at = ws.macro_r2.size() - 1;
          }
        } else {
          cross_sum += pk * g * idp;
          if (s.open && r2 < o2_r2) {
            o2_r2 = r2;
            o2_g = g;
            o2_idp = idp;
          }
        }
        if (r2 < tier_min) tier_min = r2;
      }
      if (k == 0) ws.ring_end.push_back(ws.macro_r2.size());
    }
    if (tier_distance) (*tier_distance)[k] = std::sqrt(tier_min);
  }

  if (ws.macro_r2.empty()) return d;
  d.valid = true;

  const double p0 = net.tiers[0].power;
  const double sig1 = p0 * serve_g * serve_idp;
  const double macro_int = macro_sum - serve_g * serve_idp;
  const double eta_shared = s.scheme == ReuseScheme::sfr ? s.eta_ : 1.0;

  if (!s.open) {
    d.common = sig1 / (net.sigma2 + eta_shared * p0 * macro_int + cross_sum);
    d.conditioned =
        s.scheme == ReuseScheme::universal ? true : d.common < s.t1;
  } else {
    // A user is an edge user when both tiers' shared-band offers fail; the
    // other tier's nearest point acts as interference either way.
    const double sig2 = o2_r2 < kInf ? net.tiers[1].power * o2_g * o2_idp : 0.0;
    const double base = eta_shared * p0 * macro_int + (cross_sum - sig2);
    const double sir1 = sig1 / (base + sig2);
    const double sir2 = sig2 / (base + sig1);
    d.common = std::max(sir1, sir2);
    d.conditioned = sir1 < s.t1 && sir2 < s.t2;
  }
  if (s.scheme == ReuseScheme::universal || !d.conditioned) return d;

  // Reserved band. Macro positions persist with fresh fading; under strict
  // FFR each macro joins the chosen sub-band with probability 1/delta, and
  // the band is closed to other tiers. Under SFR every macro stays active at
  // the eta power factor and cross tiers contribute freshly drawn fields
  // (their schedulers reassign users independently of the original band).
  const bool strict_mode = s.scheme == ReuseScheme::strict_ffr;
  const double inv_delta = 1.0 / static_cast<double>(net.delta);
  double thin_sum = 0.0, full_sum = 0.0, serve_gf = 0.0;
  std::size_t at = 0;
  for (std::size_t ring = 0; ring < nrings; ++ring) {
    rng::Stream fresh(ds, 0, ring, kFadeReserved);
    rng::Stream thin(ds, 0, ring, kThinning);
    for (const std::size_t end = ws.ring_end[ring]; at < end; ++at) {
      const double gf = fresh.next_exponential(s.mu_mean);
      const bool keep = strict_mode || paired ? thin.next_double() < inv_delta : false;
      if (at == serve_at) {
        serve_gf = gf;
        continue;
      }
      const double contrib = gf * ws.macro_idp[at];
      full_sum += contrib;
      if (keep) thin_sum += contrib;
    }
  }

  double cross_fresh = 0.0;
  if (s.scheme == ReuseScheme::sfr || paired) {
    for (std::size_t k = 1; k < ntiers; ++k) {
      const double pk = net.tiers[k].power;
      const double lam = net.tiers[k].density;
      for (std::size_t ring = 0; ring < nrings; ++ring) {
        rng::Stream posf(ds, k, ring, kFreshPositions);
        rng::Stream fadf(ds, k, ring, kFreshFades);
        const std::uint64_t n = posf.next_poisson(lam * s.rings.area[ring]);
        const double lo2 = s.rings.lo2[ring];
        const double span = s.rings.hi2[ring] - lo2;
        for (std::uint64_t i = 0; i < n; ++i) {
          const double r2 = lo2 + span * posf.next_double();
          cross_fresh += pk * fadf.next_exponential(s.mu_mean) * s.inv_pow(r2);
        }
      }
    }
  }

  const double sig_edge = p0 * serve_gf * serve_idp;
  if (strict_mode) {
    d.edge = sig_edge / (net.sigma2 + p0 * thin_sum);
  } else {
    d.edge = net.beta * sig_edge /
             (net.sigma2 + s.eta_ * p0 * full_sum + cross_fresh);
  }
  if (paired)
    d.baseline = sig_edge / (net.sigma2 + p0 * full_sum + cross_fresh);
  return d;
}

struct BatchStats {
  std::vector<long> hist;       // bucketed scheme values (integer: exact)
  std::vector<long> hist_base;  // paired baseline
  long conditioned = 0;
  long valid = 0;
  long attempted = 0;
  long violations = 0;
  double rate_sum = 0.0;
  double rate_sq = 0.0;
  long rate_n = 0;
};

// Index of the first grid threshold >= v, i.e. the number of grid points the
// value v strictly exceeds.
std::size_t bucket_of(const std::vector<double>& thr, double v) {
  return static_cast<std::size_t>(
      std::lower_bound(thr.begin(), thr.end(), v) - thr.begin());
}

BatchStats run_batch(const Setup& s, const std::vector<double>& thr,
                     long batch_index, long batch_size, bool paired) {
  BatchStats st;
  st.hist.assign(thr.size() + 1, 0);
  if (paired) st.hist_base.assign(thr.size() + 1, 0);
  Workspace ws;
  const long first = batch_index * batch_size;
  for (long i = 0; i < batch_size; ++i) {
    const Drop d = realize(s, first + i, ws, paired, nullptr);
    ++st.attempted;
    if (!d.valid) continue;
    ++st.valid;
    if (!d.conditioned) continue;
    ++st.conditioned;
    const double value = s.scheme == ReuseScheme::universal ? d.common : d.edge;
    ++st.hist[bucket_of(thr, value)];
    const double r = std::log1p(value);
    st.rate_sum += r;
    st.rate_sq += r * r;
    ++st.rate_n;
    if (paired) {
      ++st.hist_base[bucket_of(thr, d.baseline)];
      if (d.edge < d.baseline) ++st.violations;
    }
  }
  return st;
}

int resolve_threads(const McConfig& mc) {
  long resolved = 0;
  long env_threads = 0;
  if (const char* env = std::getenv("HETNET_FFR_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) env_threads = v;
  }
  if (mc.threads > 0) {
    // Explicit requests are honored but the environment still caps them.
    resolved = mc.threads;
    if (env_threads > 0) resolved = std::min(resolved, env_threads);
  } else if (env_threads > 0) {
    resolved = env_threads;
  } else {
    resolved = static_cast<long>(std::thread::hardware_concurrency());
  }
  return static_cast<int>(std::clamp<long>(resolved, 1, 256));
}

struct EngineResult {
  std::vector<long> exceed;
  std::vector<long> exceed_base;
  long n_cond = 0;
  long n_total = 0;
  long violations = 0;
  double rate_sum = 0.0;
  double rate_sq = 0.0;
  long rate_n = 0;
};

// Deterministic stopping: batches have fixed global indices; the result
// always uses exactly the shortest batch prefix holding >= drops conditioned
// samples, no matter how many batches got scheduled or on how many threads.
EngineResult run_engine(const Setup& s, const std::vector<double>& thr,
                        const McConfig& mc, bool paired) {
  if (mc.drops < 1) fail(errc::invalid_argument, "mc.drops must be positive");
  const long batch = mc.batch > 0 ? mc.batch : std::max<long>(500, mc.drops / 50);
  const long max_attempts = mc.max_attempts > 0 ? mc.max_attempts : 64 * mc.drops;
  const long max_batches = std::max<long>(1, (max_attempts + batch - 1) / batch);
  const int threads = resolve_threads(mc);

  std::vector<BatchStats> stats;
  long done = 0;
  long stop = -1;
  for (;;) {
    long prefix = 0;
    for (long b = 0; b < done; ++b) {
      prefix += stats[b].conditioned;
      if (prefix >= mc.drops) {
        stop = b + 1;
        break;
      }
    }
    if (stop > 0 || done >= max_batches) break;

    long wave;
    if (done == 0) {
      wave = (mc.drops + batch - 1) / batch;
    } else {
      const double p = std::max(
          static_cast<double>(prefix) / (static_cast<double>(done) * batch), 1e-3);
      wave = static_cast<long>(
                 std::ceil(static_cast<double>(mc.drops - prefix) / (p * batch))) +
             1;
    }
    wave = std::max<long>(wave, threads);
    wave = std::min(wave, max_batches - done);
    if (wave < 1) wave = 1;
    stats.resize(done + wave);

    std::atomic<long> next{done};
    const long limit = done + wave;
    auto worker = [&]() {
      for (;;) {
        const long b = next.fetch_add(1);
        if (b >= limit) break;
        stats[b] = run_batch(s, thr, b, batch, paired);
      }
    };
    const int nw = static_cast<int>(std::min<long>(threads, wave));
    if (nw <= 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      pool.reserve(nw);
      for (int w = 0; w < nw; ++w) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }
    done += wave;
  }
  if (stop < 0) stop = done;

  EngineResult out;
  std::vector<long> hist(thr.size() + 1, 0);
  std::vector<long> hist_base(thr.size() + 1, 0);
  for (long b = 0; b < stop; ++b) {
    const auto& st = stats[b];
    out.n_cond += st.conditioned;
    out.n_total += st.attempted;
    out.violations += st.violations;
    // Floating sums reduced in batch-index order: bit-identical output.
    out.rate_sum += st.rate_sum;
    out.rate_sq += st.rate_sq;
    out.rate_n += st.rate_n;
    for (std::size_t j = 0; j < hist.size(); ++j) hist[j] += st.hist[j];
    if (paired)
      for (std::size_t j = 0; j < hist_base.size(); ++j)
        hist_base[j] += st.hist_base[j];
  }

  if (out.n_cond < mc.drops &&
      out.n_cond < std::max<long>(1, out.n_total / 100))
    fail(errc::insufficient_conditioning,
         "collected " + std::to_string(out.n_cond) + " edge users in " +
             std::to_string(out.n_total) +
             " attempts; the conditioning event is too rare to simulate");
  if (out.n_cond == 0)
    fail(errc::insufficient_conditioning, "no edge users in " +
                                              std::to_string(out.n_total) +
                                              " attempts");

  // Suffix sums turn bucket counts into per-threshold exceed counts.
  out.exceed.assign(thr.size(), 0);
  out.exceed_base.assign(thr.size(), 0);
  long acc = 0, acc_base = 0;
  for (std::size_t j = thr.size(); j-- > 0;) {
    acc += hist[j + 1];
    out.exceed[j] = acc;
    if (paired) {
      acc_base += hist_base[j + 1];
      out.exceed_base[j] = acc_base;
    }
  }
  return out;
}

std::vector<double> grid_thresholds(const ThresholdGrid& grid) {
  grid.validate();
  std::vector<double> thr(grid.size());
  for (std::size_t i = 0; i < thr.size(); ++i) thr[i] = grid.at_linear(i);
  return thr;
}

EmpiricalCcdf to_ccdf(const ThresholdGrid& grid, const std::vector<long>& exceed,
                      long n_cond, long n_total) {
  EmpiricalCcdf emp;
  emp.grid = grid;
  emp.n_conditioned = n_cond;
  emp.n_total = n_total;
  emp.values.reserve(exceed.size());
  emp.stderrs.reserve(exceed.size());
  for (const long c : exceed) {
    const double v = static_cast<double>(c) / static_cast<double>(n_cond);
    emp.values.push_back(v);
    emp.stderrs.push_back(std::sqrt(v * (1.0 - v) / static_cast<double>(n_cond)));
  }
  return emp;
}

Setup make_setup(const NetworkConfig& net, ReuseScheme scheme, bool open_mode,
                 double t1, double t2, const McConfig& mc) {
  net.validate();
  if (!(mc.region_radius >= 0.0) || !std::isfinite(mc.region_radius))
    fail(errc::invalid_argument, "region_radius must be non-negative and finite");
  Setup s;
  s.net = net;
  s.scheme = scheme;
  s.open = open_mode;
  s.t1 = t1;
  s.t2 = t2;
  s.eta_ = eta(net.beta, net.delta);
  s.mu_mean = 1.0 / net.mu;
  s.alpha4 = net.alpha == 4.0;
  s.neg_half_alpha = -0.5 * net.alpha;
  const double anchor = auto_region_radius(net);
  s.rings = make_rings(anchor, mc.region_radius > 0.0 ? mc.region_radius : anchor);
  s.seed = mc.seed;
  return s;
}

}  // namespace

double auto_region_radius(const NetworkConfig& net) {
  net.validate();
  double lam_min = net.tiers[0].density;
  for (const auto& t : net.tiers) lam_min = std::min(lam_min, t.density);
  // Expected ~1000 points in the sparsest tier bounds the truncation bias
  // well below MC noise at the budgets used here.
  return std::sqrt(1000.0 / (kPi * lam_min));
}

std::vector<std::array<double, 2>> sample_ppp(double lambda, double radius,
                                              rng::Stream& stream) {
  if (!(lambda > 0.0) || !(radius > 0.0))
    fail(errc::invalid_argument, "sample_ppp needs positive density and radius");
  const std::uint64_t n = stream.next_poisson(lambda * kPi * radius * radius);
  std::vector<std::array<double, 2>> pts;
  pts.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    const double r = radius * std::sqrt(stream.next_double());
    const double th = 2.0 * kPi * stream.next_double();
    pts.push_back({r * std::cos(th), r * std::sin(th)});
  }
  return pts;
}

EmpiricalCcdf simulate_closed(ReuseScheme scheme, const NetworkConfig& net,
                              const ThresholdGrid& grid, const McConfig& mc) {
  const Setup s = make_setup(net, scheme, false, net.tiers[0].ffr_threshold, 0.0, mc);
  const auto thr = grid_thresholds(grid);
  const auto res = run_engine(s, thr, mc, false);
  return to_ccdf(grid, res.exceed, res.n_cond, res.n_total);
}

EmpiricalCcdf simulate_open(ReuseScheme scheme, const open::OpenScenario& scen,
                            const ThresholdGrid& grid, const McConfig& mc) {
  scen.validate();
  if (scheme == ReuseScheme::universal)
    fail(errc::unsupported, "open access defines edge simulation for strict_ffr and sfr only");
  const Setup s = make_setup(scen.net, scheme, true, scen.t1, scen.t2, mc);
  const auto thr = grid_thresholds(grid);
  const auto res = run_engine(s, thr, mc, false);
  return to_ccdf(grid, res.exceed, res.n_cond, res.n_total);
}

PairedCcdf simulate_closed_paired(const NetworkConfig& net,
                                  const ThresholdGrid& grid, const McConfig& mc) {
  const Setup s = make_setup(net, ReuseScheme::strict_ffr, false,
                             net.tiers[0].ffr_threshold, 0.0, mc);
  const auto thr = grid_thresholds(grid);
  const auto res = run_engine(s, thr, mc, true);
  PairedCcdf out;
  out.strict_ffr = to_ccdf(grid, res.exceed, res.n_cond, res.n_total);
  out.universal_edge = to_ccdf(grid, res.exceed_base, res.n_cond, res.n_total);
  out.dominance_violations = res.violations;
  return out;
}

namespace {

McRate reduce_rate(const EngineResult& res) {
  McRate rate;
  rate.n = res.rate_n;
  rate.nats = res.rate_sum / static_cast<double>(res.rate_n);
  const double var =
      std::max(0.0, res.rate_sq / static_cast<double>(res.rate_n) - rate.nats * rate.nats);
  rate.stderr_nats = std::sqrt(var / static_cast<double>(res.rate_n));
  return rate;
}

}  // namespace

McRate estimate_rate_closed(ReuseScheme scheme, const NetworkConfig& net,
                            const McConfig& mc) {
  const Setup s = make_setup(net, scheme, false, net.tiers[0].ffr_threshold, 0.0, mc);
  return reduce_rate(run_engine(s, {}, mc, false));
}

McRate estimate_rate_open(ReuseScheme scheme, const open::OpenScenario& scen,
                          const McConfig& mc) {
  scen.validate();
  if (scheme == ReuseScheme::universal)
    fail(errc::unsupported, "open access defines edge rates for strict_ffr and sfr only");
  const Setup s = make_setup(scen.net, scheme, true, scen.t1, scen.t2, mc);
  return reduce_rate(run_engine(s, {}, mc, false));
}

CompareReport compare_curves(const closed::CcdfCurve& analytic,
                             const EmpiricalCcdf& simulated) {
  if (!analytic.grid.same_as(simulated.grid) ||
      analytic.values.size() != simulated.values.size())
    fail(errc::grid_mismatch,
         "analytic and simulated curves use different threshold grids");
  CompareReport rep;
  const std::size_t n = analytic.values.size();
  rep.abs_diff.reserve(n);
  rep.z_score.reserve(n);
  std::size_t within = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double diff = simulated.values[i] - analytic.values[i];
    const double ad = std::fabs(diff);
    rep.abs_diff.push_back(ad);
    const double se = simulated.stderrs[i];
    rep.z_score.push_back(se > 0.0 ? diff / se : (ad == 0.0 ? 0.0 : kInf));
    rep.max_abs_diff = std::max(rep.max_abs_diff, ad);
    // Tiny slack keeps zero-stderr tail points (value exactly 0 or 1) from
    // counting as outliers when the analytic tail is a rounding away.
    if (ad <= 3.0 * se + 1e-12) ++within;
  }
  rep.frac_within_3sigma =
      n == 0 ? 1.0 : static_cast<double>(within) / static_cast<double>(n);
  return rep;
}

DropOutcome run_single_drop(ReuseScheme scheme, const NetworkConfig& net,
                            const McConfig& mc, long index) {
  const Setup s = make_setup(net, scheme, false, net.tiers[0].ffr_threshold, 0.0, mc);
  Workspace ws;
  std::vector<double> dist;
  const Drop d = realize(s, index, ws, false, &dist);
  DropOutcome out;
  out.common_sinr = d.common;
  out.conditioned = d.valid && d.conditioned && scheme != ReuseScheme::universal;
  if (out.conditioned) out.edge_sinr = d.edge;
  out.tier_distance = std::move(dist);
  return out;
}

}  // namespace hffr::mc
