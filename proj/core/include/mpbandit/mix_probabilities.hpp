#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mpbandit/bandit_env.hpp"

namespace mpbandit {

/// Symmetric mixed strategy for N identical players: arm i is pulled with
/// probability c[i]. Arms outside `active` have c[i] == 0 exactly.
struct MixProbabilities {
  std::vector<double> c;
  std::vector<ArmIndex> active;  // increasing order
};

/// Minimizes the expected unclaimed reward sum_i (1 - c_i)^N mu_i over the
/// simplex when all N players share the same c.
///
/// Stationarity makes (1 - c_i)^(N-1) mu_i equal across active arms, giving
///
///   c_i = 1 - ((|H| - 1) / sum_{k in H} mu_k^(-1/(N-1))) * mu_i^(-1/(N-1)).
///
/// Arms whose c_i comes out <= 0 are dropped from H and the rest re-solved
/// until every remaining c_i is positive. The common factor only grows as arms
/// are dropped, so a dropped arm never becomes positive again.
///
/// Requires N >= 2 and every mean > 0 (callers clamp observed means); throws
/// ConfigError otherwise.
MixProbabilities compute_mix_probabilities(std::span<const double> means,
                                           std::size_t n_players);

}  // namespace mpbandit
