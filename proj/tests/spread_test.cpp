#include <catch2/catch_amalgamated.hpp>

#include "influgame/spread.hpp"

#include <random>

#include "oracles.hpp"

using namespace influgame;

TEST_CASE("four-node example spread trace") {
  auto g = oracles::example_graph();
  // Seeding a (node 0): round 1 adds c, round 2 adds d; b never activates.
  auto trace = spread_trace(g, Coalition{0});
  REQUIRE(trace.size() == 2);
  REQUIRE(trace[0] == Coalition{0, 2});
  REQUIRE(trace[1] == Coalition{0, 2, 3});
  REQUIRE(spread(g, Coalition{0}) == Coalition{0, 2, 3});
  // Seeding b reaches everybody: b -> a -> c -> d (d needs 3+1+1 >= 4).
  REQUIRE(spread(g, Coalition{1}) == Coalition::all(4));
  // Fixpoint seed produces no rounds.
  REQUIRE(spread_trace(g, Coalition{0, 2, 3}).empty());
  REQUIRE(spread_trace(g, Coalition{}).empty());
}

TEST_CASE("unconvincible nodes never activate") {
  auto g = oracles::example_graph().with_thresholds(
      {Threshold::finite(1), Threshold::finite(1), Threshold::unconvincible(),
       Threshold::finite(4)});
  // c is unconvincible, so a alone contributes only 3 to d.
  REQUIRE(spread(g, Coalition{0}) == Coalition{0});
  REQUIRE(spread(g, Coalition{1}) == Coalition{0, 1, 3});
  // An unconvincible node in the seed still counts and spreads.
  REQUIRE(spread(g, Coalition{2}) == Coalition{2});
}

TEST_CASE("unconvincible seeds do not count toward the quota") {
  // Node 2 has no reachable threshold: it stays in the spread as a seed but
  // is never convinced, so it contributes nothing to the activation count.
  const InfluenceGraph g(3, {{0, 1, 1}},
                         {Threshold::finite(1), Threshold::finite(1),
                          Threshold::unconvincible()});
  SpreadEngine engine(g);
  REQUIRE(engine.run(0b100) == 0b100);
  REQUIRE(engine.reaches(0b100, 1) == false);
  REQUIRE(engine.reaches(0b101, 2) == true);   // 0 convinces 1
  REQUIRE(engine.reaches(0b101, 3) == false);  // 2 never counts
  REQUIRE(engine.reaches(0b111, 3) == false);
}

TEST_CASE("reaches matches run") {
  auto g = oracles::example_graph();
  SpreadEngine engine(g);
  for (std::uint32_t x = 0; x < 16; ++x) {
    const int size = std::popcount(engine.run(x));
    for (int q = 0; q <= 5; ++q) REQUIRE(engine.reaches(x, q) == (size >= q));
  }
}

TEST_CASE("engine agrees with the naive oracle on random graphs") {
  std::mt19937_64 rng(20240811);
  for (int rep = 0; rep < 200; ++rep) {
    auto game = oracles::random_game(rng, 10);
    const InfluenceGraph& g = game.graph();
    SpreadEngine engine(g);
    const std::uint32_t full = (1u << g.node_count()) - 1u;
    for (int t = 0; t < 32; ++t) {
      const std::uint32_t seed = static_cast<std::uint32_t>(rng()) & full;
      REQUIRE(engine.run(seed) == oracles::naive_spread(g, seed));
    }
  }
}

TEST_CASE("engine rejects more than 32 nodes") {
  InfluenceGraph g(33, {}, std::vector<Threshold>(33, Threshold::finite(1)));
  REQUIRE_THROWS_AS(SpreadEngine(g), std::invalid_argument);
}
