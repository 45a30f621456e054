#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "mpbandit/bandit_env.hpp"
#include "mpbandit/rng.hpp"

namespace mpbandit {

/// Undirected communication graph for a single turn.
class CommGraph {
 public:
  using Edge = std::pair<PlayerIndex, PlayerIndex>;  // first < second

  explicit CommGraph(std::size_t n_players);

  /// Adds {p, q}. Self-loops and duplicates are rejected with
  /// std::invalid_argument.
  void add_edge(PlayerIndex p, PlayerIndex q);

  std::size_t n_players() const noexcept { return neighbors_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  /// Neighbors of p in increasing index order.
  const std::vector<PlayerIndex>& neighbors(PlayerIndex p) const {
    return neighbors_.at(p);
  }
  bool has_edge(PlayerIndex p, PlayerIndex q) const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<PlayerIndex>> neighbors_;
};

/// Erdős-Rényi G(n, alpha). Pairs are visited in lexicographic order and each
/// consumes exactly one uniform draw, so a graph costs n(n-1)/2 draws
/// regardless of alpha. Throws ConfigError if alpha is outside [0, 1].
CommGraph sample_graph(std::size_t n_players, double alpha, Rng& rng);

/// Graph for `turn` drawn from its own substream of the episode.
CommGraph sample_turn_graph(std::size_t n_players, double alpha,
                            std::uint64_t episode_seed, std::uint64_t turn);

struct Observation {
  ArmIndex arm;
  Reward reward;
  PlayerIndex source;

  friend bool operator==(const Observation&, const Observation&) = default;
};

/// Per-player inboxes: the player's own (arm, realized reward) first, then
/// one report per neighbor in increasing neighbor index. Collision losers
/// report the 0 they received.
std::vector<std::vector<Observation>> disseminate(const TurnOutcome& outcome,
                                                  const CommGraph& graph);

}  // namespace mpbandit
