#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace mpbandit {

/// Named substreams of one episode. Every random draw in the simulator comes
/// from exactly one of these, so the stream a component sees never depends on
/// how much randomness another component consumed.
enum class StreamRole : std::uint64_t {
  ArmRewards = 1,
  Winners = 2,
  Graph = 3,
  Player = 4,
  InitOrder = 5,
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Stable seed for repetition `rep` at sweep position `alpha_index`.
std::uint64_t episode_seed(std::uint64_t base_seed, std::size_t alpha_index,
                           std::size_t rep) noexcept;

std::uint64_t substream_seed(std::uint64_t episode_seed, StreamRole role,
                             std::uint64_t index = 0) noexcept;

class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static Rng substream(std::uint64_t episode_seed, StreamRole role,
                       std::uint64_t index = 0) {
    return Rng(substream_seed(episode_seed, role, index));
  }

  static constexpr result_type min() { return std::mt19937_64::min(); }
  static constexpr result_type max() { return std::mt19937_64::max(); }
  result_type operator()() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform on {0, ..., n - 1}; n must be positive.
  std::size_t uniform_index(std::size_t n);

  bool bernoulli(double p) { return uniform() < p; }

  double beta(double a, double b);

 private:
  std::mt19937_64 engine_;
};

}  // namespace mpbandit
