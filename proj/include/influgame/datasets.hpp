#ifndef INFLUGAME_DATASETS_HPP
#define INFLUGAME_DATASETS_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "influgame/game.hpp"
#include "influgame/graph.hpp"
#include "influgame/netformat.hpp"

namespace influgame {

/// Bundled case studies. Each dataset ships as a network file plus one or
/// more threshold cases:
///
///   monkeys     C1 (min), C2 (half indegree, rounded up), C3 (strict
///               majority of indegree), C4 (full indegree); isolated monkeys
///               always stay unconvincible
///   dining      C1, C2, C3 (constant thresholds 1, 2, 3)
///   studentgov  C1 (role-based thresholds stored in the file)
struct BuiltinCase {
  std::string dataset;
  std::string case_id;
};

inline const std::vector<BuiltinCase>& builtin_cases() {
  static const std::vector<BuiltinCase> cases = {
      {"monkeys", "C1"},    {"monkeys", "C2"}, {"monkeys", "C3"},
      {"monkeys", "C4"},    {"dining", "C1"},  {"dining", "C2"},
      {"dining", "C3"},     {"studentgov", "C1"},
  };
  return cases;
}

namespace detail {

inline void check(bool ok, const std::string& what) {
  if (!ok) throw DataError("dataset integrity check failed: " + what);
}

inline InfluenceGame load_monkeys(const std::string& path, const std::string& case_id) {
  const NetworkFile file = load_network_file(path);
  InfluenceGraph g = to_graph(file);
  check(g.node_count() == 20, "monkeys has 20 nodes");
  check(g.arcs().size() == 62, "monkeys has 31 undirected edges");
  for (const Arc& a : g.arcs()) check(a.weight == 1, "monkeys edges have weight 1");
  // Undirected: every arc is paired with its reverse.
  for (const Arc& a : g.arcs()) {
    bool paired = false;
    for (const Arc& b : g.arcs())
      if (b.src == a.dst && b.dst == a.src) paired = true;
    check(paired, "monkeys edge list is symmetric");
  }
  check(file.quota.has_value() && *file.quota == 14, "monkeys quota is 14");

  ThresholdScheme scheme = ThresholdScheme::min();
  if (case_id == "C1") {
    scheme = ThresholdScheme::min();
  } else if (case_id == "C2") {
    scheme = ThresholdScheme::average_indegree();
  } else if (case_id == "C3") {
    scheme = ThresholdScheme::majority_indegree();
  } else if (case_id == "C4") {
    scheme = ThresholdScheme::max_indegree();
  } else {
    throw DataError("unknown monkeys case '" + case_id + "' (expected C1..C4)");
  }
  g = apply_threshold_scheme(g, scheme);
  // Monkeys that interact with nobody can never be convinced, under every
  // threshold case (the constant/min scheme would otherwise give them 1).
  std::vector<Threshold> t = g.thresholds();
  int isolated = 0;
  for (int i = 0; i < g.node_count(); ++i)
    if (g.in_degree(i) == 0 && g.out_degree(i) == 0) {
      t[i] = Threshold::unconvincible();
      ++isolated;
    }
  check(isolated == 6, "monkeys has 6 isolated nodes");
  return InfluenceGame(g.with_thresholds(std::move(t)), *file.quota);
}

inline InfluenceGame load_dining(const std::string& path, const std::string& case_id) {
  const NetworkFile file = load_network_file(path);
  InfluenceGraph g = to_graph(file);
  check(g.node_count() == 26, "dining has 26 nodes");
  check(g.arcs().size() == 52, "dining has 52 arcs");
  // Influence arcs reverse the two dining-partner choices of each girl, so
  // every node has exactly one incoming weight-2 arc (her first choice) and
  // one incoming weight-1 arc (her second choice).
  for (int i = 0; i < g.node_count(); ++i) {
    std::int64_t w1 = 0, w2 = 0;
    for (const Arc& a : g.arcs())
      if (a.dst == i) (a.weight == 1 ? w1 : w2) += a.weight;
    check(g.in_degree(i) == 2 && w1 == 1 && w2 == 2,
          "dining node has one weight-1 and one weight-2 incoming arc");
  }
  check(file.quota.has_value() && *file.quota == 14, "dining quota is 14");

  std::int64_t k = 0;
  if (case_id == "C1") {
    k = 1;
  } else if (case_id == "C2") {
    k = 2;
  } else if (case_id == "C3") {
    k = 3;
  } else {
    throw DataError("unknown dining case '" + case_id + "' (expected C1..C3)");
  }
  g = apply_threshold_scheme(g, ThresholdScheme::constant(k));
  return InfluenceGame(std::move(g), *file.quota);
}

inline InfluenceGame load_studentgov(const std::string& path, const std::string& case_id) {
  if (case_id != "C1")
    throw DataError("unknown studentgov case '" + case_id + "' (expected C1)");
  const NetworkFile file = load_network_file(path);
  InfluenceGraph g = to_graph(file);
  check(g.node_count() == 11, "studentgov has 11 nodes");
  check(g.arcs().size() == 41, "studentgov has 41 arcs");
  // Arc weight encodes the sender's position: advisors (9,10,11 one-based)
  // send weight 1, the prime minister (2) weight 3, ministers weight 2.
  for (const Arc& a : g.arcs()) {
    std::int64_t expect = 2;
    if (a.src == 8 || a.src == 9 || a.src == 10) expect = 1;
    if (a.src == 1) expect = 3;
    check(a.weight == expect, "studentgov arc weight matches sender position");
  }
  // Thresholds: advisors 1, prime minister = indegree, ministers = strict
  // half of indegree rounded up.
  static constexpr std::array<std::int64_t, 11> expected_thr = {1, 5, 1, 4, 1, 2,
                                                                3, 4, 1, 1, 1};
  for (int i = 0; i < 11; ++i) {
    check(g.threshold(i).is_finite() && g.threshold(i).value() == expected_thr[i],
          "studentgov threshold matches role");
    std::int64_t derived = 1;
    if (i == 1)
      derived = g.in_degree(i);
    else if (!(i == 8 || i == 9 || i == 10))
      derived = (g.in_degree(i) + 1) / 2;
    check(expected_thr[i] == derived, "studentgov threshold derivable from indegree");
  }
  check(file.quota.has_value() && *file.quota == 6, "studentgov quota is 6");
  return InfluenceGame(std::move(g), *file.quota);
}

}  // namespace detail

/// Loads a bundled case study from `data_dir`. Throws DataError when the
/// name or case is unknown, or when the file fails its integrity checks.
inline InfluenceGame load_builtin(const std::string& dataset, const std::string& case_id,
                                  const std::string& data_dir) {
  const std::string base = data_dir.empty() ? std::string(".") : data_dir;
  if (dataset == "monkeys")
    return detail::load_monkeys(base + "/monkeys.net-txt", case_id);
  if (dataset == "dining") return detail::load_dining(base + "/dining.net-txt", case_id);
  if (dataset == "studentgov")
    return detail::load_studentgov(base + "/studentgov.net-txt", case_id);
  throw DataError("unknown dataset '" + dataset +
                  "' (expected monkeys, dining, or studentgov)");
}

}  // namespace influgame

#endif  // INFLUGAME_DATASETS_HPP
