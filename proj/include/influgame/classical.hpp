#ifndef INFLUGAME_CLASSICAL_HPP
#define INFLUGAME_CLASSICAL_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "influgame/graph.hpp"

namespace influgame {

enum class Direction { In, Out };

/// C_D(i) = deg(i) / (n - 1). Weights and thresholds are ignored.
inline std::vector<double> degree_centrality(const InfluenceGraph& g, Direction dir) {
  const int n = g.node_count();
  if (n < 2) throw std::invalid_argument("degree centrality needs n >= 2");
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) {
    const int d = dir == Direction::In ? g.in_degree(i) : g.out_degree(i);
    out[i] = static_cast<double>(d) / (n - 1);
  }
  return out;
}

/// Hop-count distance matrix over out-arcs; unreachable pairs get distance n.
inline std::vector<std::vector<int>> hop_distances(const InfluenceGraph& g) {
  const int n = g.node_count();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, n));
  std::vector<int> queue(n);
  for (int s = 0; s < n; ++s) {
    dist[s][s] = 0;
    int head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      const int u = queue[head++];
      for (auto it = g.out_begin(u); it != g.out_end(u); ++it) {
        const int v = it->first;
        if (dist[s][v] == n && v != s) {
          dist[s][v] = dist[s][u] + 1;
          queue[tail++] = v;
        }
      }
    }
  }
  return dist;
}

/// C_C(i) = (n - 1) / sum_j D_ij, with D_ij = n for unreachable j.
inline std::vector<double> closeness_centrality(const InfluenceGraph& g) {
  const int n = g.node_count();
  if (n < 2) throw std::invalid_argument("closeness centrality needs n >= 2");
  const auto dist = hop_distances(g);
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) {
    std::int64_t sum = 0;
    for (int j = 0; j < n; ++j)
      if (j != i) sum += dist[i][j];
    out[i] = static_cast<double>(n - 1) / static_cast<double>(sum);
  }
  return out;
}

/// Whether the betweenness sum counts ordered pairs (j,k) in which i is an
/// endpoint. Exclude is the standard definition; Include follows the bare
/// formula sum_{j != k} b_jik / b_jk, where every path contains its
/// endpoints.
enum class EndpointPolicy { Exclude, Include };

/// C_B(i) = (1 / ((n-1)(n-2))) * sum over ordered pairs of the fraction of
/// shortest j->k paths through i; the ratio is 0 when no path exists.
/// Dependency accumulation (Brandes) per source.
inline std::vector<double> betweenness_centrality(
    const InfluenceGraph& g, EndpointPolicy policy = EndpointPolicy::Exclude) {
  const int n = g.node_count();
  if (n < 3) throw std::invalid_argument("betweenness centrality needs n >= 3");
  std::vector<double> score(n, 0.0);
  std::vector<int> dist(n), order(n);
  std::vector<std::uint64_t> sigma(n);
  std::vector<double> delta(n);
  std::vector<std::vector<int>> preds(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(sigma.begin(), sigma.end(), 0);
    std::fill(delta.begin(), delta.end(), 0.0);
    for (auto& p : preds) p.clear();
    int head = 0, tail = 0;
    dist[s] = 0;
    sigma[s] = 1;
    order[tail++] = s;
    while (head < tail) {
      const int u = order[head++];
      for (auto it = g.out_begin(u); it != g.out_end(u); ++it) {
        const int v = it->first;
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          order[tail++] = v;
        }
        if (dist[v] == dist[u] + 1) {
          sigma[v] += sigma[u];
          preds[v].push_back(u);
        }
      }
    }
    int reached = 0;
    for (int idx = tail - 1; idx > 0; --idx) {
      const int w = order[idx];
      ++reached;
      for (int v : preds[w])
        delta[v] += static_cast<double>(sigma[v]) / static_cast<double>(sigma[w]) *
                    (1.0 + delta[w]);
      score[w] += delta[w];
    }
    if (policy == EndpointPolicy::Include) {
      // Each of the `reached` targets t contributes a full path at both
      // endpoints: pair (s,t) counts once for s and once for t.
      score[s] += reached;
      for (int idx = 1; idx < tail; ++idx) score[order[idx]] += 1.0;
    }
  }
  const double norm = static_cast<double>(n - 1) * static_cast<double>(n - 2);
  for (double& v : score) v /= norm;
  return score;
}

}  // namespace influgame

#endif  // INFLUGAME_CLASSICAL_HPP
