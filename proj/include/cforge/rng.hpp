#pragma once

#include <array>
#include <cstdint>

namespace cforge {

/// SplitMix64 (Steele, Lea, Flood 2014). Used to expand a 64-bit seed into
/// generator state and to derive child streams.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();

 private:
  std::uint64_t state_;
};

/// xoshiro256** 1.0 (Blackman and Vigna), state seeded by four SplitMix64
/// outputs of the user seed. All library randomness goes through this type so
/// that a (config, seed) pair replays bit-for-bit; no std distribution is used
/// because their output is implementation-defined.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed);

  std::uint64_t next();
  std::uint64_t operator()() { return next(); }
  static constexpr std::uint64_t min() { return 0; }
  static constexpr std::uint64_t max() { return UINT64_MAX; }

  /// Uniform integer in [0, bound) by rejection; exact for every bound >= 1.
  std::uint64_t uniform_below(std::uint64_t bound);
  /// Uniform double in [0, 1) with 53 random bits.
  double uniform_unit();

  /// An independent child stream; advances this generator by one draw.
  Rng split();

  friend bool operator==(const Rng&, const Rng&) = default;

 private:
  Rng() = default;
  std::array<std::uint64_t, 4> s_{};
};

}  // namespace cforge
