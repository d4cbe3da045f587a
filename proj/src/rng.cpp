#include "hffr/rng.hpp"

#include <cmath>

namespace hffr::rng {

namespace {

inline std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

// splitmix64 step: advances the state and returns the mixed output.
inline std::uint64_t splitmix_next(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t mix64(std::uint64_t x) {
  std::uint64_t z = x + 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

Stream::Stream(std::uint64_t seed) {
  std::uint64_t st = seed;
  for (auto& w : s_) w = splitmix_next(st);
}

Stream::Stream(std::uint64_t seed, std::uint64_t k1, std::uint64_t k2,
               std::uint64_t k3) {
  // Fold the substream keys into the seed one at a time; the multipliers
  // keep (k1, k2, k3) permutations from colliding.
  std::uint64_t st = seed;
  st = mix64(st ^ (0x9E3779B97F4A7C15ull * (k1 + 1)));
  st = mix64(st ^ (0xBF58476D1CE4E5B9ull * (k2 + 1)));
  st = mix64(st ^ (0x94D049BB133111EBull * (k3 + 1)));
  for (auto& w : s_) w = splitmix_next(st);
}

std::uint64_t Stream::next_u64() {
  // xoshiro256++
  const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Stream::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Stream::next_exponential(double mean) {
  // -log(1 - U) with U in [0, 1) never takes the log of zero.
  return -mean * std::log1p(-next_double());
}

std::uint64_t Stream::next_poisson(double mean) {
  if (!(mean > 0.0)) return 0;
  if (mean < 10.0) {
    // Multiplicative CDF inversion.
    const double limit = std::exp(-mean);
    std::uint64_t k = 0;
    double prod = next_double();
    while (prod > limit) {
      ++k;
      prod *= next_double();
    }
    return k;
  }
  // PTRS transformed rejection (Hoermann), exact for mean >= 10.
  const double slam = std::sqrt(mean);
  const double loglam = std::log(mean);
  const double b = 0.931 + 2.53 * slam;
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double v_r = 0.9277 - 3.6224 / (b - 2.0);
  for (;;) {
    const double u = next_double() - 0.5;
    const double v = next_double();
    const double us = 0.5 - std::fabs(u);
    const double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= v_r) return static_cast<std::uint64_t>(kf);
    if (kf < 0.0 || (us < 0.013 && v > us)) continue;
    if (std::log(v) + std::log(inv_alpha) - std::log(a / (us * us) + b) <=
        kf * loglam - mean - std::lgamma(kf + 1.0))
      return static_cast<std::uint64_t>(kf);
  }
}

}  // namespace hffr::rng
