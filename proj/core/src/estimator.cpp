#include "mpbandit/estimator.hpp"

#include <stdexcept>

namespace mpbandit {

void PlayerEstimator::add(ArmIndex arm, Reward reward) {
  if (arm >= n_arms()) throw std::out_of_range("observation arm out of range");
  if (reward != 0) {
    ++successes_[arm];
  } else {
    ++failures_[arm];
  }
  ++total_;
}

std::optional<double> PlayerEstimator::mean(ArmIndex i) const {
  const auto n = count(i);
  if (n == 0) return std::nullopt;
  return static_cast<double>(successes_[i]) / static_cast<double>(n);
}

}  // namespace mpbandit
