#include "mpbandit/mix_probabilities.hpp"

#include <cassert>
#include <cmath>
#include <numeric>
#include <string>

#include "mpbandit/error.hpp"

namespace mpbandit {

MixProbabilities compute_mix_probabilities(std::span<const double> means,
                                           std::size_t n_players) {
  if (n_players < 2) {
    throw ConfigError("mixing probabilities need at least 2 players");
  }
  if (means.empty()) throw ConfigError("mixing probabilities need arms");
  for (std::size_t i = 0; i < means.size(); ++i) {
    if (!(means[i] > 0.0) || !std::isfinite(means[i])) {
      throw ConfigError("mean of arm " + std::to_string(i) +
                        " must be positive for mixing probabilities");
    }
  }

  const double inv_root = 1.0 / static_cast<double>(n_players - 1);
  // weight_i = (1 / mu_i)^(1/(N-1))
  std::vector<double> weight(means.size());
  for (std::size_t i = 0; i < means.size(); ++i) {
    weight[i] = std::pow(1.0 / means[i], inv_root);
  }

  MixProbabilities out;
  out.c.assign(means.size(), 0.0);
  out.active.resize(means.size());
  std::iota(out.active.begin(), out.active.end(), ArmIndex{0});

  while (true) {
    double weight_sum = 0.0;
    for (ArmIndex i : out.active) weight_sum += weight[i];
    const double scale =
        static_cast<double>(out.active.size() - 1) / weight_sum;

    std::vector<ArmIndex> kept;
    kept.reserve(out.active.size());
    for (ArmIndex i : out.active) {
      out.c[i] = 1.0 - scale * weight[i];
      if (out.c[i] > 0.0) kept.push_back(i);
    }
    // The best arm always survives: scale * w_min <= (|H|-1)/|H| < 1.
    assert(!kept.empty());
    if (kept.size() == out.active.size()) break;
    for (ArmIndex i : out.active) {
      if (out.c[i] <= 0.0) out.c[i] = 0.0;
    }
    out.active = std::move(kept);
  }
  return out;
}

}  // namespace mpbandit
