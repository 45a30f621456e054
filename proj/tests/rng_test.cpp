#include "mpbandit/rng.hpp"

#include <cmath>
#include <set>

#include <gtest/gtest.h>

namespace mpbandit {
namespace {

TEST(Rng, SameSeedSameStream) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a(), b());
}

TEST(Rng, SubstreamsDifferByRoleAndIndex) {
  std::set<std::uint64_t> seeds;
  for (auto role : {StreamRole::ArmRewards, StreamRole::Winners, StreamRole::Graph,
                    StreamRole::Player, StreamRole::InitOrder}) {
    for (std::uint64_t i = 0; i < 8; ++i) seeds.insert(substream_seed(1234, role, i));
  }
  EXPECT_EQ(seeds.size(), 5u * 8u);
}

TEST(Rng, EpisodeSeedDependsOnRepetitionAndAlphaIndex) {
  EXPECT_NE(episode_seed(1, 0, 0), episode_seed(1, 0, 1));
  EXPECT_NE(episode_seed(1, 0, 1), episode_seed(1, 1, 0));
  EXPECT_EQ(episode_seed(1, 3, 4), episode_seed(1, 3, 4));
}

TEST(Rng, UniformInUnitInterval) {
  Rng rng(7);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(Rng, BetaMeanMatches) {
  // Beta(3, 1): mean 0.75, variance ab/((a+b)^2 (a+b+1)) = 3/80.
  Rng rng(99);
  constexpr int kDraws = 100000;
  double sum = 0.0;
  for (int i = 0; i < kDraws; ++i) sum += rng.beta(3.0, 1.0);
  const double sigma = std::sqrt(3.0 / 80.0 / kDraws);
  EXPECT_NEAR(sum / kDraws, 0.75, 3.0 * sigma);
}

}  // namespace
}  // namespace mpbandit
