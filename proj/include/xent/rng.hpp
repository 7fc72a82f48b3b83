#pragma once

// Deterministic random streams. std::mt19937_64 produces the same sequence on
// every conforming platform; doubles come from the 53-bit shift construction
// instead of std::uniform_real_distribution, whose output is
// implementation-defined. Substreams are derived with the splitmix64 finalizer
// so that parallel consumers stay reproducible regardless of scheduling.

#include <cstdint>
#include <random>

namespace xent {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace detail

class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  // Independent stream `id` of a master seed; deterministic per (seed, id).
  static RandomStream substream(std::uint64_t seed, std::uint64_t id) {
    return RandomStream(detail::splitmix64(detail::splitmix64(seed) ^ detail::splitmix64(~id)));
  }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace xent
