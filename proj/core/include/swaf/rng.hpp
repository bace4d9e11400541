#pragma once

#include <concepts>
#include <cstdint>
#include <random>

namespace swaf {

/// Anything that can stand in for the random draws used by the rules.
/// RngStream is the production model; tests substitute scripted sources.
template <class R>
concept UniformSource = requires(R& r, std::int64_t lo, std::int64_t hi) {
  { r.uniform_real() } -> std::convertible_to<double>;
  { r.uniform_int(lo, hi) } -> std::convertible_to<std::int64_t>;
};

/// Deterministic single-owner random stream (64-bit Mersenne Twister).
///
/// The conversions to real and integer draws are implemented here rather than
/// through <random> distributions, whose output is not specified across
/// standard library implementations. Same seed gives the same sequence on
/// every platform.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed);

  /// Uniform draw in [0, 1) with 53 bits of resolution.
  double uniform_real();

  /// Uniform integer in [lo, hi] inclusive. Throws ArgumentError if lo > hi.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

static_assert(UniformSource<RngStream>);

/// SplitMix64 finalizer; used to decorrelate user seeds.
std::uint64_t mix64(std::uint64_t z);

/// Per-run seed derived from an experiment master seed and a run index.
/// derive_seed(master, i) = mix64(mix64(master) ^ (i + 1) * golden-ratio).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace swaf
