#include <catch2/catch_amalgamated.hpp>

#include "influgame/graph.hpp"

#include "oracles.hpp"

using namespace influgame;

TEST_CASE("threshold basics") {
  auto t = Threshold::finite(3);
  REQUIRE(t.is_finite());
  REQUIRE(t.value() == 3);
  auto u = Threshold::unconvincible();
  REQUIRE_FALSE(u.is_finite());
  REQUIRE_THROWS_AS(u.value(), std::logic_error);
  REQUIRE_THROWS_AS(Threshold::finite(0), std::invalid_argument);
  REQUIRE(t.raw() < u.raw());
}

TEST_CASE("coalition bitset semantics") {
  Coalition x{0, 2, 5};
  REQUIRE(x.size() == 3);
  REQUIRE(x.contains(2));
  REQUIRE_FALSE(x.contains(1));
  REQUIRE(x.with(1).size() == 4);
  REQUIRE(x.without(2).size() == 2);
  REQUIRE(x.subset_of(Coalition::all(6)));
  REQUIRE_FALSE(Coalition::all(6).subset_of(x));
  REQUIRE(x.members() == std::vector<int>{0, 2, 5});
  REQUIRE_THROWS_AS(Coalition{32}, std::out_of_range);
}

TEST_CASE("graph canonicalization merges parallel arcs and sorts") {
  InfluenceGraph g(3, {{1, 0, 2}, {0, 1, 1}, {0, 1, 4}},
                   {Threshold::finite(1), Threshold::finite(2), Threshold::finite(1)});
  REQUIRE(g.arcs().size() == 2);
  REQUIRE(g.arcs()[0] == Arc{0, 1, 5});
  REQUIRE(g.arcs()[1] == Arc{1, 0, 2});
  REQUIRE(g.in_degree(1) == 1);
  REQUIRE(g.in_weight(1) == 5);
  REQUIRE(g.out_degree(0) == 1);
}

TEST_CASE("graph validation") {
  std::vector<Threshold> t2{Threshold::finite(1), Threshold::finite(1)};
  REQUIRE_THROWS_AS(InfluenceGraph(2, {{0, 0, 1}}, t2), std::invalid_argument);
  REQUIRE_THROWS_AS(InfluenceGraph(2, {{0, 2, 1}}, t2), std::invalid_argument);
  REQUIRE_THROWS_AS(InfluenceGraph(2, {{0, 1, 0}}, t2), std::invalid_argument);
  REQUIRE_THROWS_AS(InfluenceGraph(2, {}, {Threshold::finite(1)}),
                    std::invalid_argument);
}

TEST_CASE("threshold schemes") {
  // Node 0: indeg 0; node 1: indeg 1; node 2: indeg 3.
  InfluenceGraph g(4, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {3, 2, 1}},
                   std::vector<Threshold>(4, Threshold::finite(1)));
  auto min = apply_threshold_scheme(g, ThresholdScheme::min());
  for (int i = 0; i < 4; ++i) REQUIRE(min.threshold(i) == Threshold::finite(1));
  auto c3 = apply_threshold_scheme(g, ThresholdScheme::constant(3));
  for (int i = 0; i < 4; ++i) REQUIRE(c3.threshold(i) == Threshold::finite(3));
  auto avg = apply_threshold_scheme(g, ThresholdScheme::average_indegree());
  REQUIRE_FALSE(avg.threshold(0).is_finite());
  REQUIRE(avg.threshold(1) == Threshold::finite(1));
  REQUIRE(avg.threshold(2) == Threshold::finite(2));  // ceil(3/2)
  auto maj = apply_threshold_scheme(g, ThresholdScheme::majority_indegree());
  REQUIRE_FALSE(maj.threshold(0).is_finite());
  REQUIRE(maj.threshold(1) == Threshold::finite(1));
  REQUIRE(maj.threshold(2) == Threshold::finite(2));  // floor(3/2)+1
  auto max = apply_threshold_scheme(g, ThresholdScheme::max_indegree());
  REQUIRE_FALSE(max.threshold(0).is_finite());
  REQUIRE(max.threshold(2) == Threshold::finite(3));
}

TEST_CASE("average vs majority differ on even indegree") {
  // indeg(1) = 2: average rounds up to 1? ceil(2/2)=1; majority = 2/2+1 = 2.
  InfluenceGraph g(3, {{0, 1, 1}, {2, 1, 1}},
                   std::vector<Threshold>(3, Threshold::finite(1)));
  auto avg = apply_threshold_scheme(g, ThresholdScheme::average_indegree());
  auto maj = apply_threshold_scheme(g, ThresholdScheme::majority_indegree());
  REQUIRE(avg.threshold(1) == Threshold::finite(1));
  REQUIRE(maj.threshold(1) == Threshold::finite(2));
}

TEST_CASE("from_undirected expands pairs and rejects duplicates") {
  auto g = from_undirected(3, {{0, 1, 2}, {1, 2, 1}});
  REQUIRE(g.arcs().size() == 4);
  REQUIRE(g.in_weight(0) == 2);
  REQUIRE(g.in_weight(1) == 3);
  REQUIRE_THROWS_AS(from_undirected(3, {{0, 1, 1}, {1, 0, 1}}),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(from_undirected(3, {{1, 1, 1}}), std::invalid_argument);
}

TEST_CASE("reverse_with_weight_swap") {
  InfluenceGraph g(3, {{0, 1, 1}, {0, 2, 2}},
                   std::vector<Threshold>(3, Threshold::finite(1)));
  auto r = reverse_with_weight_swap(g);
  REQUIRE(r.arcs().size() == 2);
  REQUIRE(r.arcs()[0] == Arc{1, 0, 2});
  REQUIRE(r.arcs()[1] == Arc{2, 0, 1});
  // Double reversal restores the original graph.
  REQUIRE(reverse_with_weight_swap(r) == g);
  InfluenceGraph bad(2, {{0, 1, 3}}, std::vector<Threshold>(2, Threshold::finite(1)));
  REQUIRE_THROWS_AS(reverse_with_weight_swap(bad), std::invalid_argument);
}

TEST_CASE("threshold mass") {
  auto g = oracles::example_graph();
  REQUIRE(threshold_mass(g, Coalition{0, 1}) == Mass::finite(2));
  REQUIRE(threshold_mass(g, Coalition{3}) == Mass::finite(4));
  REQUIRE(threshold_mass(g, Coalition{}) == Mass::finite(0));
  auto u = g.with_thresholds({Threshold::finite(1), Threshold::unconvincible(),
                              Threshold::finite(1), Threshold::finite(4)});
  REQUIRE_FALSE(threshold_mass(u, Coalition{0, 1}).is_finite());
  REQUIRE(Mass::finite(5) < Mass::infinite());
  REQUIRE_FALSE(Mass::infinite() < Mass::infinite());
}
