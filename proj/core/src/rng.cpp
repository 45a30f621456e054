#include "mpbandit/rng.hpp"

#include <cassert>

namespace mpbandit {

std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t episode_seed(std::uint64_t base_seed, std::size_t alpha_index,
                           std::size_t rep) noexcept {
  return base_seed ^ mix64(mix64(static_cast<std::uint64_t>(alpha_index)) ^
                           static_cast<std::uint64_t>(rep));
}

std::uint64_t substream_seed(std::uint64_t episode_seed, StreamRole role,
                             std::uint64_t index) noexcept {
  std::uint64_t h = mix64(episode_seed);
  h = mix64(h ^ static_cast<std::uint64_t>(role));
  return mix64(h ^ index);
}

std::size_t Rng::uniform_index(std::size_t n) {
  assert(n > 0);
  std::uniform_int_distribution<std::size_t> dist(0, n - 1);
  return dist(engine_);
}

double Rng::beta(double a, double b) {
  std::gamma_distribution<double> ga(a, 1.0);
  std::gamma_distribution<double> gb(b, 1.0);
  const double x = ga(engine_);
  const double y = gb(engine_);
  return x / (x + y);
}

}  // namespace mpbandit
