#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mpbandit/bandit_env.hpp"

namespace mpbandit {

/// Per-arm success/failure tallies a player has seen, from its own pulls and
/// from neighbor reports alike.
class PlayerEstimator {
 public:
  explicit PlayerEstimator(std::size_t n_arms)
      : successes_(n_arms, 0), failures_(n_arms, 0) {}

  void add(ArmIndex arm, Reward reward);

  std::size_t n_arms() const noexcept { return successes_.size(); }
  std::uint64_t count(ArmIndex i) const { return successes_.at(i) + failures_.at(i); }
  std::uint64_t successes(ArmIndex i) const { return successes_.at(i); }
  std::uint64_t failures(ArmIndex i) const { return failures_.at(i); }
  std::uint64_t total() const noexcept { return total_; }

  /// Observed mean; empty until the arm has been seen.
  std::optional<double> mean(ArmIndex i) const;

  friend bool operator==(const PlayerEstimator&, const PlayerEstimator&) = default;

 private:
  std::vector<std::uint64_t> successes_;
  std::vector<std::uint64_t> failures_;
  std::uint64_t total_ = 0;
};

}  // namespace mpbandit
