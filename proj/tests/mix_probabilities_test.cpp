#include "mpbandit/mix_probabilities.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "mpbandit/config.hpp"
#include "mpbandit/error.hpp"
#include "oracles.hpp"

namespace mpbandit {
namespace {

using testing::minimize_turn_loss;
using testing::turn_loss;

// Minimizer of sum_i (1-c_i)^5 mu_i for the spread means, found offline with
// scipy SLSQP (ftol 1e-16) and independently by minimize_turn_loss.
const std::vector<double> kSpreadOptimum{
    0.2405564004156, 0.2178615144555, 0.1913108001482, 0.1595375015247,
    0.1203424166256, 0.0698753501325, 0.0005160166979, 0.0, 0.0, 0.0};

void expect_valid(const MixProbabilities& mix, std::size_t n_arms) {
  ASSERT_EQ(mix.c.size(), n_arms);
  double sum = 0.0;
  for (ArmIndex i = 0; i < n_arms; ++i) {
    const bool active = std::find(mix.active.begin(), mix.active.end(), i) != mix.active.end();
    EXPECT_GE(mix.c[i], 0.0);
    EXPECT_LE(mix.c[i], 1.0);
    EXPECT_EQ(active, mix.c[i] > 0.0);
    sum += mix.c[i];
  }
  EXPECT_NEAR(sum, 1.0, 1e-9);
}

TEST(MixProbabilities, EqualMeansGiveUniform) {
  const std::vector<double> mu(10, 0.5);
  const auto mix = compute_mix_probabilities(mu, 5);
  expect_valid(mix, 10);
  for (double c : mix.c) EXPECT_NEAR(c, 0.1, 1e-12);
}

TEST(MixProbabilities, OracleAgreesWithFrozenOptimum) {
  const auto oracle = minimize_turn_loss(spread_means(), 5);
  for (std::size_t i = 0; i < oracle.size(); ++i) {
    EXPECT_NEAR(oracle[i], kSpreadOptimum[i], 1e-8) << "arm " << i;
  }
}

TEST(MixProbabilities, SpreadMeansMatchOracle) {
  const auto mu = spread_means();
  const auto mix = compute_mix_probabilities(mu, 5);
  expect_valid(mix, 10);
  const auto oracle = minimize_turn_loss(mu, 5);
  for (std::size_t i = 0; i < mu.size(); ++i) {
    EXPECT_NEAR(mix.c[i], oracle[i], 1e-6) << "arm " << i;
    EXPECT_NEAR(mix.c[i], kSpreadOptimum[i], 1e-6) << "arm " << i;
  }
  EXPECT_EQ(mix.active, (std::vector<ArmIndex>{0, 1, 2, 3, 4, 5, 6}));
}

TEST(MixProbabilities, NearZeroArmsAreDropped) {
  std::vector<double> mu{0.9, 0.9, 0.9};
  mu.resize(10, 1e-9);
  const std::size_t n = 5;

  // One unconstrained pass, written out directly.
  const double root = 1.0 / (n - 1);
  double weight_sum = 0.0;
  for (double m : mu) weight_sum += std::pow(1.0 / m, root);
  std::vector<ArmIndex> nonpositive;
  for (ArmIndex i = 0; i < mu.size(); ++i) {
    const double c = 1.0 - ((mu.size() - 1) / weight_sum) / std::pow(mu[i], root);
    if (c <= 0.0) nonpositive.push_back(i);
  }
  ASSERT_EQ(nonpositive, (std::vector<ArmIndex>{3, 4, 5, 6, 7, 8, 9}));

  const auto mix = compute_mix_probabilities(mu, n);
  expect_valid(mix, mu.size());
  EXPECT_EQ(mix.active, (std::vector<ArmIndex>{0, 1, 2}));
  for (ArmIndex i : nonpositive) EXPECT_EQ(mix.c[i], 0.0);

  const std::vector<double> restricted{0.9, 0.9, 0.9};
  const auto oracle = minimize_turn_loss(restricted, n);
  for (ArmIndex i = 0; i < 3; ++i) EXPECT_NEAR(mix.c[i], oracle[i], 1e-6);
}

TEST(MixProbabilities, SingleArmTakesEverything) {
  const std::vector<double> mu{0.4};
  const auto mix = compute_mix_probabilities(mu, 3);
  EXPECT_EQ(mix.c, (std::vector<double>{1.0}));
}

TEST(MixProbabilities, RejectsBadInput) {
  const std::vector<double> ok{0.5, 0.4};
  EXPECT_THROW(compute_mix_probabilities(ok, 1), ConfigError);
  const std::vector<double> zero{0.5, 0.0};
  EXPECT_THROW(compute_mix_probabilities(zero, 3), ConfigError);
  EXPECT_THROW(compute_mix_probabilities(std::vector<double>{}, 3), ConfigError);
}

TEST(MixProbabilities, RandomVectorsValidMonotoneAndOptimal) {
  std::mt19937_64 gen(2017);
  std::uniform_real_distribution<double> mean_dist(0.01, 1.0);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + gen() % 4;
    const std::size_t s = n + 1 + gen() % (10 - n);
    std::vector<double> mu(s);
    for (auto& m : mu) m = mean_dist(gen);

    const auto mix = compute_mix_probabilities(mu, n);
    expect_valid(mix, s);

    for (ArmIndex i = 0; i < s; ++i) {
      for (ArmIndex j = 0; j < s; ++j) {
        if (mu[i] > mu[j]) ASSERT_GE(mix.c[i], mix.c[j]);
      }
    }

    const double value = turn_loss(mix.c, mu, n);
    for (int k = 0; k < 1000; ++k) {
      const auto point = testing::random_simplex_point(s, gen);
      ASSERT_LE(value, turn_loss(point, mu, n) + 1e-12);
    }
    const auto oracle = minimize_turn_loss(mu, n);
    EXPECT_NEAR(value, turn_loss(oracle, mu, n), 1e-6);
  }
}

}  // namespace
}  // namespace mpbandit
