#pragma once

#include <array>
#include <cstdint>

namespace hubloc {

/// Portable pseudo-random generator: xoshiro256** whose 256-bit state is
/// filled from the 64-bit seed by four successive splitmix64 outputs.
///
///   splitmix64:  z = (s += 0x9E3779B97F4A7C15);
///                z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
///                z = (z ^ (z >> 27)) * 0x94D049BB133111EB;
///                return z ^ (z >> 31);
///
///   xoshiro256**: result = rotl(s1 * 5, 7) * 9;
///                 t = s1 << 17;
///                 s2 ^= s0; s3 ^= s1; s1 ^= s2; s0 ^= s3;
///                 s2 ^= t; s3 = rotl(s3, 45);
///
/// Derived draws are defined exactly so other implementations can reproduce
/// the same streams:
///   uniform01()  = (next() >> 11) * 2^-53, in [0, 1)
///   below(n)     = Lemire multiply-shift with rejection, in [0, n)
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) noexcept;

  std::uint64_t next() noexcept;
  std::uint64_t operator()() noexcept { return next(); }

  double uniform01() noexcept;
  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform01(); }
  /// Uniform integer in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }

 private:
  std::array<std::uint64_t, 4> s_{};
};

std::uint64_t splitmix64(std::uint64_t& state) noexcept;

}  // namespace hubloc
