#pragma once

#include <cstdint>

namespace hffr::rng {

// splitmix64 finalizer: the standard 64-bit avalanche mix.
std::uint64_t mix64(std::uint64_t x);

// xoshiro256++ stream seeded through splitmix64. Streams are cheap to
// construct, so the simulator keys an independent stream off
// (seed, realization, tier, ring, purpose) instead of jumping one generator;
// that is what makes results independent of thread count and lets a larger
// region reuse the inner rings' draws verbatim.
class Stream {
 public:
  explicit Stream(std::uint64_t seed);
  Stream(std::uint64_t seed, std::uint64_t k1, std::uint64_t k2, std::uint64_t k3);

  std::uint64_t next_u64();
  double next_double();  // uniform in [0, 1)
  double next_exponential(double mean);
  // Poisson sampling: CDF inversion below mean 10, the PTRS transformed
  // rejection method above it. Both paths consume a deterministic-but-
  // variable number of uniforms, which is fine because no other draw shares
  // this stream.
  std::uint64_t next_poisson(double mean);

 private:
  std::uint64_t s_[4];
};

}  // namespace hffr::rng
