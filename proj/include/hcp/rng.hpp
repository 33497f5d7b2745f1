#pragma once

#include <cstdint>
#include <utility>
#include <limits>

namespace hcp {

using Seed = std::uint64_t;

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

/// SplitMix64 finaliser.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Seed of trial i under base seed: mix64(base ^ mix64(i ^ 0xD1B54A32D192ED03)).
constexpr Seed derive_seed(Seed base, std::uint64_t index) {
  return mix64(base ^ mix64(index ^ 0xD1B54A32D192ED03ULL));
}

/// 53-bit uniform double in [0, 1).
constexpr double to_unit(std::uint64_t x) { return static_cast<double>(x >> 11) * 0x1.0p-53; }

/// Element i of the SplitMix64 stream started at seed, as a uniform in [0,1).
/// Counter based, so any index can be drawn independently of the others.
constexpr double counter_uniform(Seed seed, std::uint64_t i) { return to_unit(mix64(seed + (i + 1) * kGolden)); }

/// Sequential SplitMix64 generator; satisfies UniformRandomBitGenerator.
/// Integer and real draws are done by hand so results match on every platform.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;
  explicit SplitMix64(Seed seed = 0) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    state_ += kGolden;
    return mix64(state_);
  }
  double uniform() { return to_unit((*this)()); }
  /// Uniform integer in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>((*this)()) * bound) >> 64);
  }
  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::uint64_t state_;
};

template <class It>
void shuffle(It first, It last, SplitMix64& rng) {
  auto n = static_cast<std::uint64_t>(last - first);
  for (std::uint64_t i = n; i > 1; --i) {
    auto j = rng.below(i);
    std::swap(first[i - 1], first[j]);
  }
}

}  // namespace hcp
