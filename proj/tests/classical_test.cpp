#include <catch2/catch_amalgamated.hpp>

#include "influgame/classical.hpp"

#include <random>

#include "oracles.hpp"

using namespace influgame;

namespace {

// Pairwise path-counting betweenness oracle: for each ordered pair (j,k),
// node i lies on a shortest path iff dist(j,i) + dist(i,k) = dist(j,k), and
// the fraction of such paths is sigma_j(i) * sigma_i(k) / sigma_j(k).
std::vector<double> pairwise_betweenness(const InfluenceGraph& g,
                                         EndpointPolicy policy) {
  const int n = g.node_count();
  const auto dist = hop_distances(g);
  // sigma[s][t]: number of shortest s->t paths.
  std::vector<std::vector<double>> sigma(n, std::vector<double>(n, 0.0));
  for (int s = 0; s < n; ++s) {
    sigma[s][s] = 1.0;
    // Process nodes in order of distance from s.
    for (int d = 1; d < n; ++d)
      for (int t = 0; t < n; ++t) {
        if (dist[s][t] != d) continue;
        for (const Arc& a : g.arcs())
          if (a.dst == t && dist[s][a.src] == d - 1) sigma[s][t] += sigma[s][a.src];
      }
  }
  std::vector<double> score(n, 0.0);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      if (j == k || dist[j][k] >= n) continue;  // no path
      for (int i = 0; i < n; ++i) {
        if (policy == EndpointPolicy::Exclude && (i == j || i == k)) continue;
        if (dist[j][i] >= n || dist[i][k] >= n) continue;
        if (dist[j][i] + dist[i][k] != dist[j][k]) continue;
        score[i] += sigma[j][i] * sigma[i][k] / sigma[j][k];
      }
    }
  const double norm = double(n - 1) * double(n - 2);
  for (double& v : score) v /= norm;
  return score;
}

}  // namespace

TEST_CASE("degree centrality") {
  auto g = oracles::example_graph();
  auto din = degree_centrality(g, Direction::In);
  auto dout = degree_centrality(g, Direction::Out);
  REQUIRE(din == std::vector<double>{1.0 / 3, 0.0, 1.0 / 3, 1.0});
  REQUIRE(dout == std::vector<double>{2.0 / 3, 2.0 / 3, 1.0 / 3, 0.0});
}

TEST_CASE("hop distances treat unreachable as n") {
  auto g = oracles::example_graph();
  auto d = hop_distances(g);
  REQUIRE(d[0][2] == 1);
  REQUIRE(d[0][3] == 1);
  REQUIRE(d[0][1] == 4);  // b unreachable from a
  REQUIRE(d[1][2] == 2);  // b -> a -> c
  REQUIRE(d[3][0] == 4);  // d is a sink
}

TEST_CASE("closeness on a directed path") {
  // 0 -> 1 -> 2 -> 3: C_C(0) = 3/(1+2+3) = 0.5.
  InfluenceGraph g(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}},
                   std::vector<Threshold>(4, Threshold::finite(1)));
  auto cc = closeness_centrality(g);
  REQUIRE(cc[0] == Catch::Approx(0.5));
  REQUIRE(cc[1] == Catch::Approx(3.0 / (4 + 1 + 2)));
  REQUIRE(cc[3] == Catch::Approx(3.0 / 12));  // reaches nobody
}

TEST_CASE("betweenness on an undirected star") {
  // Center 0, leaves 1..4. Exclude: center carries all 12 leaf pairs.
  std::vector<Arc> edges;
  for (int i = 1; i < 5; ++i) edges.push_back({0, i, 1});
  auto g = from_undirected(5, edges);
  auto ex = betweenness_centrality(g, EndpointPolicy::Exclude);
  REQUIRE(ex[0] == Catch::Approx(1.0));
  for (int i = 1; i < 5; ++i) REQUIRE(ex[i] == 0.0);
  // Include adds every ordered pair with a path at both endpoints.
  auto in = betweenness_centrality(g, EndpointPolicy::Include);
  REQUIRE(in[0] == Catch::Approx((12.0 + 8.0) / 12.0));
  for (int i = 1; i < 5; ++i) REQUIRE(in[i] == Catch::Approx(8.0 / 12.0));
}

TEST_CASE("betweenness matches the pairwise oracle on random graphs") {
  std::mt19937_64 rng(13579);
  for (int rep = 0; rep < 100; ++rep) {
    const auto game = oracles::random_game(rng, 9);
    const InfluenceGraph& g = game.graph();
    if (g.node_count() < 3) continue;
    for (auto policy : {EndpointPolicy::Exclude, EndpointPolicy::Include}) {
      auto fast = betweenness_centrality(g, policy);
      auto slow = pairwise_betweenness(g, policy);
      for (int i = 0; i < g.node_count(); ++i)
        REQUIRE(fast[i] == Catch::Approx(slow[i]).margin(1e-12));
    }
  }
}

TEST_CASE("size guards") {
  InfluenceGraph g1(1, {}, {Threshold::finite(1)});
  REQUIRE_THROWS_AS(degree_centrality(g1, Direction::In), std::invalid_argument);
  REQUIRE_THROWS_AS(closeness_centrality(g1), std::invalid_argument);
  InfluenceGraph g2(2, {}, std::vector<Threshold>(2, Threshold::finite(1)));
  REQUIRE_THROWS_AS(betweenness_centrality(g2), std::invalid_argument);
}
