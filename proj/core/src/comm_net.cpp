#include "mpbandit/comm_net.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mpbandit/error.hpp"

namespace mpbandit {

CommGraph::CommGraph(std::size_t n_players) : neighbors_(n_players) {}

void CommGraph::add_edge(PlayerIndex p, PlayerIndex q) {
  if (p >= n_players() || q >= n_players()) {
    throw std::out_of_range("edge endpoint out of range");
  }
  if (p == q) throw std::invalid_argument("self-loop in communication graph");
  if (p > q) std::swap(p, q);
  if (has_edge(p, q)) throw std::invalid_argument("duplicate edge");
  edges_.emplace_back(p, q);
  auto insert_sorted = [](std::vector<PlayerIndex>& v, PlayerIndex x) {
    v.insert(std::upper_bound(v.begin(), v.end(), x), x);
  };
  insert_sorted(neighbors_[p], q);
  insert_sorted(neighbors_[q], p);
}

bool CommGraph::has_edge(PlayerIndex p, PlayerIndex q) const {
  if (p >= n_players() || q >= n_players()) return false;
  const auto& adj = neighbors_[p];
  return std::binary_search(adj.begin(), adj.end(), q);
}

CommGraph sample_graph(std::size_t n_players, double alpha, Rng& rng) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw ConfigError("connectivity alpha must lie in [0, 1], got " +
                      std::to_string(alpha));
  }
  if (n_players < 1) throw ConfigError("graph needs at least one player");
  CommGraph g(n_players);
  for (PlayerIndex p = 0; p < n_players; ++p) {
    for (PlayerIndex q = p + 1; q < n_players; ++q) {
      if (rng.uniform() < alpha) g.add_edge(p, q);
    }
  }
  return g;
}

CommGraph sample_turn_graph(std::size_t n_players, double alpha,
                            std::uint64_t episode_seed, std::uint64_t turn) {
  Rng rng = Rng::substream(episode_seed, StreamRole::Graph, turn);
  return sample_graph(n_players, alpha, rng);
}

std::vector<std::vector<Observation>> disseminate(const TurnOutcome& outcome,
                                                  const CommGraph& graph) {
  const std::size_t n = outcome.n_players();
  if (graph.n_players() != n) {
    throw std::invalid_argument("graph has " +
                                std::to_string(graph.n_players()) +
                                " players but the turn has " +
                                std::to_string(n));
  }
  auto report = [&](PlayerIndex q) {
    return Observation{outcome.choices[q], outcome.realized_rewards[q], q};
  };
  std::vector<std::vector<Observation>> inbox(n);
  for (PlayerIndex p = 0; p < n; ++p) {
    const auto& adj = graph.neighbors(p);
    inbox[p].reserve(adj.size() + 1);
    inbox[p].push_back(report(p));
    for (PlayerIndex q : adj) inbox[p].push_back(report(q));
  }
  return inbox;
}

}  // namespace mpbandit
