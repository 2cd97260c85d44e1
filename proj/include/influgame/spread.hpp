#ifndef INFLUGAME_SPREAD_HPP
#define INFLUGAME_SPREAD_HPP

#include <bit>
#include <cstdint>
#include <vector>

#include "influgame/graph.hpp"

namespace influgame {

/// Iterative spread-of-influence fixpoint over bitmask coalitions.
///
/// A node joins the active set once the summed weight of arcs from active
/// nodes reaches its threshold; the process runs to fixpoint (at most n
/// rounds). The engine owns reusable scratch, so one instance per thread;
/// the graph itself is never mutated.
class SpreadEngine {
 public:
  explicit SpreadEngine(const InfluenceGraph& g)
      : n_(g.node_count()), acc_(n_, 0) {
    if (n_ > 32) throw std::invalid_argument("spread engine supports at most 32 nodes");
    thr_.reserve(n_);
    offsets_.reserve(n_ + 1);
    offsets_.push_back(0);
    for (int i = 0; i < n_; ++i) {
      thr_.push_back(g.threshold(i).raw());
      if (g.threshold(i).is_finite()) convincible_ |= 1u << i;
      for (auto it = g.out_begin(i); it != g.out_end(i); ++it) {
        targets_.push_back(it->first);
        weights_.push_back(it->second);
      }
      offsets_.push_back(static_cast<int>(targets_.size()));
    }
  }

  /// Full fixpoint F(seed) as a bitmask.
  std::uint32_t run(std::uint32_t seed) {
    std::uint32_t active = seed;
    std::uint32_t frontier = seed;
    reset_acc();
    while (frontier != 0) {
      const std::uint32_t next = relax(frontier, active);
      active |= next;
      frontier = next;
    }
    return active;
  }

  /// True iff F(seed) contains at least `quota` convincible nodes; stops as
  /// soon as the quota is reached. Unconvincible seed members stay in the
  /// active set but are never convinced, so they do not count.
  bool reaches(std::uint32_t seed, int quota) {
    if (std::popcount(seed & convincible_) >= quota) return true;
    std::uint32_t active = seed;
    std::uint32_t frontier = seed;
    reset_acc();
    while (frontier != 0) {
      const std::uint32_t next = relax(frontier, active);
      active |= next;
      if (std::popcount(active & convincible_) >= quota) return true;
      frontier = next;
    }
    return false;
  }

  /// Active sets after each round that activated somebody (the chain
  /// F^1, F^2, ... up to the fixpoint). Empty for a fixpoint seed.
  std::vector<std::uint32_t> trace(std::uint32_t seed) {
    std::vector<std::uint32_t> out;
    std::uint32_t active = seed;
    std::uint32_t frontier = seed;
    reset_acc();
    while (frontier != 0) {
      const std::uint32_t next = relax(frontier, active);
      if (next == 0) break;
      active |= next;
      out.push_back(active);
      frontier = next;
    }
    return out;
  }

 private:
  void reset_acc() { std::fill(acc_.begin(), acc_.end(), 0); }

  // Adds the frontier's outgoing weight to inactive targets, returns the
  // set of nodes that crossed their threshold.
  std::uint32_t relax(std::uint32_t frontier, std::uint32_t active) {
    std::uint32_t next = 0;
    for (std::uint32_t m = frontier; m != 0; m &= m - 1) {
      const int j = std::countr_zero(m);
      for (int k = offsets_[j]; k < offsets_[j + 1]; ++k) {
        const int t = targets_[k];
        if ((active >> t) & 1u) continue;
        if ((acc_[t] += weights_[k]) >= thr_[t]) next |= 1u << t;
      }
    }
    return next & ~active;
  }

  int n_;
  std::uint32_t convincible_ = 0;
  std::vector<std::int64_t> acc_;
  std::vector<std::int64_t> thr_;
  std::vector<int> offsets_;
  std::vector<int> targets_;
  std::vector<std::int64_t> weights_;
};

/// F(seed): the spread-of-influence fixpoint.
inline Coalition spread(const InfluenceGraph& g, Coalition seed) {
  SpreadEngine engine(g);
  return Coalition(engine.run(seed.bits()));
}

/// The successive active sets F^1(seed), F^2(seed), ... (cumulative, one
/// entry per round with new activations).
inline std::vector<Coalition> spread_trace(const InfluenceGraph& g, Coalition seed) {
  SpreadEngine engine(g);
  std::vector<Coalition> out;
  for (std::uint32_t s : engine.trace(seed.bits())) out.push_back(Coalition(s));
  return out;
}

}  // namespace influgame

#endif  // INFLUGAME_SPREAD_HPP
