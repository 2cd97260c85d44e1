#ifndef INFLUGAME_GAME_HPP
#define INFLUGAME_GAME_HPP

#include <utility>

#include "influgame/graph.hpp"
#include "influgame/spread.hpp"

namespace influgame {

/// An influence graph together with an activation quota q. A coalition X is
/// winning iff the spread F(X) contains at least q convincible nodes; an
/// unconvincible node can propose (it belongs to F(X) as a seed) but is
/// never convinced, so it does not count toward the quota. Monotone by
/// construction, so this is a simple game on the node set.
class InfluenceGame {
 public:
  InfluenceGame(InfluenceGraph graph, int quota)
      : graph_(std::move(graph)), quota_(quota) {
    if (quota_ < 0 || quota_ > graph_.node_count() + 1)
      throw std::invalid_argument("quota must be in [0, n+1]");
  }

  const InfluenceGraph& graph() const { return graph_; }
  int quota() const { return quota_; }
  int player_count() const { return graph_.node_count(); }

 private:
  InfluenceGraph graph_;
  int quota_;
};

inline bool is_winning(const InfluenceGame& game, Coalition x) {
  SpreadEngine engine(game.graph());
  return engine.reaches(x.bits(), game.quota());
}

}  // namespace influgame

#endif  // INFLUGAME_GAME_HPP
