#ifndef INFLUGAME_EXACT_HPP
#define INFLUGAME_EXACT_HPP

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "influgame/game.hpp"
#include "influgame/graph.hpp"
#include "influgame/spread.hpp"

namespace influgame {

class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact per-player tallies from one sweep over all 2^n coalitions.
struct PlayerTally {
  std::uint64_t eta = 0;                    // # coalitions where the player is critical
  std::vector<std::uint64_t> crit_by_size;  // index s = coalition size, 0..n
  std::uint64_t win_containing = 0;         // |W_i|
  std::uint64_t lose_excluding = 0;         // |L_-i|
  Mass min_win_mass = Mass::infinite();     // min threshold mass over winning X containing i
  int min_win_card = kNoWinningCoalition;   // min |X| over winning X containing i

  static constexpr int kNoWinningCoalition = -1;
};

struct GameReport {
  int n = 0;
  int quota = 0;
  std::vector<PlayerTally> players;
  std::uint64_t total_winning = 0;
  std::int64_t total_mass = 0;  // w(N): sum of finite thresholds

  std::uint64_t coalition_count() const { return std::uint64_t(1) << n; }
};

struct EnumerateOptions {
  int max_nodes = 30;
  int workers = 1;
};

namespace detail {

struct PartialTally {
  std::vector<std::uint64_t> eta;
  std::vector<std::uint64_t> crit_by_size;  // n+1 buckets per player, flattened
  std::vector<std::uint64_t> win_containing;
  std::vector<std::uint64_t> lose_containing;
  std::vector<std::int64_t> min_mass;  // kNone = no finite-mass winning coalition yet
  std::vector<int> min_card;
  std::uint64_t winning = 0;

  static constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::max();

  explicit PartialTally(int n)
      : eta(n, 0),
        crit_by_size(std::size_t(n) * (n + 1), 0),
        win_containing(n, 0),
        lose_containing(n, 0),
        min_mass(n, kNone),
        min_card(n, std::numeric_limits<int>::max()) {}

  void merge(const PartialTally& o) {
    for (std::size_t i = 0; i < eta.size(); ++i) {
      eta[i] += o.eta[i];
      win_containing[i] += o.win_containing[i];
      lose_containing[i] += o.lose_containing[i];
      min_mass[i] = std::min(min_mass[i], o.min_mass[i]);
      min_card[i] = std::min(min_card[i], o.min_card[i]);
    }
    for (std::size_t k = 0; k < crit_by_size.size(); ++k)
      crit_by_size[k] += o.crit_by_size[k];
    winning += o.winning;
  }
};

// Runs fn(part_index, begin, end) over `parts` contiguous ranges covering
// [0, total), each aligned to 64-coalition boundaries.
template <typename Fn>
void run_partitioned(std::uint64_t total, int parts, Fn fn) {
  if (parts < 1) parts = 1;
  const std::uint64_t words = (total + 63) / 64;
  std::vector<std::thread> threads;
  std::uint64_t begin_word = 0;
  for (int p = 0; p < parts; ++p) {
    const std::uint64_t end_word = words * (p + 1) / parts;
    const std::uint64_t begin = begin_word * 64;
    const std::uint64_t end = std::min(end_word * 64, total);
    if (parts == 1) {
      fn(p, begin, end);
    } else {
      threads.emplace_back(fn, p, begin, end);
    }
    begin_word = end_word;
  }
  for (auto& t : threads) t.join();
}

}  // namespace detail

/// One enumeration sweep over all 2^n coalitions. The coalition space may be
/// partitioned across workers; partial tallies merge associatively, so the
/// result is identical for any worker count.
inline GameReport enumerate_coalitions(const InfluenceGame& game,
                                       EnumerateOptions opt = {}) {
  const int n = game.player_count();
  if (n > opt.max_nodes || n > 30)
    throw CapacityError("exact enumeration limited to " +
                        std::to_string(std::min(opt.max_nodes, 30)) + " nodes, got " +
                        std::to_string(n));
  const std::uint64_t total = std::uint64_t(1) << n;
  const int quota = game.quota();
  const InfluenceGraph& g = game.graph();

  // Phase 1: win status of every coalition. Chunks are 64-aligned so each
  // worker writes disjoint words.
  std::vector<std::uint64_t> win((total + 63) / 64, 0);
  detail::run_partitioned(total, opt.workers,
                          [&](int, std::uint64_t begin, std::uint64_t end) {
                            SpreadEngine engine(g);
                            for (std::uint64_t x = begin; x < end; ++x) {
                              if (engine.reaches(static_cast<std::uint32_t>(x), quota))
                                win[x >> 6] |= std::uint64_t(1) << (x & 63);
                            }
                          });
  const auto is_win = [&](std::uint64_t x) -> bool {
    return (win[x >> 6] >> (x & 63)) & 1u;
  };

  // Phase 2: per-player tallies, one partial per partition.
  std::vector<std::int64_t> thr(n);
  std::uint32_t unc_mask = 0;
  for (int i = 0; i < n; ++i) {
    if (g.threshold(i).is_finite()) {
      thr[i] = g.threshold(i).value();
    } else {
      unc_mask |= 1u << i;
    }
  }
  std::vector<detail::PartialTally> partials;
  partials.reserve(std::max(opt.workers, 1));
  for (int p = 0; p < std::max(opt.workers, 1); ++p) partials.emplace_back(n);
  detail::run_partitioned(
      total, opt.workers, [&](int part, std::uint64_t begin, std::uint64_t end) {
        detail::PartialTally& t = partials[part];
        for (std::uint64_t x = begin; x < end; ++x) {
          const auto bits = static_cast<std::uint32_t>(x);
          if (is_win(x)) {
            ++t.winning;
            const int size = std::popcount(bits);
            std::int64_t mass = 0;
            const bool finite = (bits & unc_mask) == 0;
            if (finite)
              for (std::uint32_t m = bits; m != 0; m &= m - 1)
                mass += thr[std::countr_zero(m)];
            for (std::uint32_t m = bits; m != 0; m &= m - 1) {
              const int i = std::countr_zero(m);
              ++t.win_containing[i];
              if (!is_win(x ^ (std::uint64_t(1) << i))) {
                ++t.eta[i];
                ++t.crit_by_size[std::size_t(i) * (n + 1) + size];
              }
              if (finite && mass < t.min_mass[i]) t.min_mass[i] = mass;
              if (size < t.min_card[i]) t.min_card[i] = size;
            }
          } else {
            for (std::uint32_t m = bits; m != 0; m &= m - 1)
              ++t.lose_containing[std::countr_zero(m)];
          }
        }
      });
  detail::PartialTally merged = std::move(partials[0]);
  for (std::size_t p = 1; p < partials.size(); ++p) merged.merge(partials[p]);

  GameReport report;
  report.n = n;
  report.quota = quota;
  report.total_winning = merged.winning;
  for (int i = 0; i < n; ++i)
    if (g.threshold(i).is_finite()) report.total_mass += g.threshold(i).value();
  const std::uint64_t total_losing = total - merged.winning;
  report.players.resize(n);
  for (int i = 0; i < n; ++i) {
    PlayerTally& pt = report.players[i];
    pt.eta = merged.eta[i];
    pt.crit_by_size.assign(merged.crit_by_size.begin() + std::size_t(i) * (n + 1),
                           merged.crit_by_size.begin() + std::size_t(i + 1) * (n + 1));
    pt.win_containing = merged.win_containing[i];
    pt.lose_excluding = total_losing - merged.lose_containing[i];
    pt.min_win_mass = merged.min_mass[i] == detail::PartialTally::kNone
                          ? Mass::infinite()
                          : Mass::finite(merged.min_mass[i]);
    pt.min_win_card = merged.min_card[i] == std::numeric_limits<int>::max()
                          ? PlayerTally::kNoWinningCoalition
                          : merged.min_card[i];
  }
  return report;
}

namespace detail {

inline unsigned __int128 factorial128(int k) {
  unsigned __int128 f = 1;
  for (int i = 2; i <= k; ++i) f *= static_cast<unsigned>(i);
  return f;
}

}  // namespace detail

/// kappa(i) = sum over coalition sizes s of crit_by_size[s] * (s-1)! * (n-s)!,
/// in exact 128-bit arithmetic (exceeds 64 bits from n = 21 or so).
inline unsigned __int128 shapley_numerator(const GameReport& report, int i) {
  const int n = report.n;
  unsigned __int128 kappa = 0;
  const PlayerTally& t = report.players.at(i);
  for (int s = 1; s <= n; ++s)
    kappa += static_cast<unsigned __int128>(t.crit_by_size[s]) *
             detail::factorial128(s - 1) * detail::factorial128(n - s);
  return kappa;
}

/// Normalized Banzhaf index Bz(i) = eta(i) / sum_j eta(j); all zeros when no
/// player is ever critical.
inline std::vector<double> banzhaf(const GameReport& report) {
  std::uint64_t total = 0;
  for (const PlayerTally& t : report.players) total += t.eta;
  std::vector<double> out(report.n, 0.0);
  if (total == 0) return out;
  for (int i = 0; i < report.n; ++i)
    out[i] = static_cast<double>(report.players[i].eta) / static_cast<double>(total);
  return out;
}

/// Shapley-Shubik index SS(i) = kappa(i) / n!.
inline std::vector<double> shapley_shubik(const GameReport& report) {
  std::vector<double> out(report.n, 0.0);
  const unsigned __int128 nfact = detail::factorial128(report.n);
  for (int i = 0; i < report.n; ++i)
    out[i] = static_cast<double>(shapley_numerator(report, i)) /
             static_cast<double>(nfact);
  return out;
}

/// Satisfaction C_S(i) = (|W_i| + |L_-i|) / 2^n.
inline std::vector<double> satisfaction(const GameReport& report) {
  std::vector<double> out(report.n, 0.0);
  const double denom = std::pow(2.0, report.n);
  for (int i = 0; i < report.n; ++i)
    out[i] = (static_cast<double>(report.players[i].win_containing) +
              static_cast<double>(report.players[i].lose_excluding)) /
             denom;
  return out;
}

/// Effort(i): minimal threshold mass of a winning coalition containing i.
inline Mass effort(const GameReport& report, int i) {
  return report.players.at(i).min_win_mass;
}

/// Width(i): minimal cardinality of a winning coalition containing i, or
/// PlayerTally::kNoWinningCoalition.
inline int width(const GameReport& report, int i) {
  return report.players.at(i).min_win_card;
}

/// C_E(i) = (w(N) - Effort(i)) / w(N); zero when the effort is infinite or
/// w(N) = 0.
inline std::vector<double> effort_centrality(const GameReport& report) {
  std::vector<double> out(report.n, 0.0);
  if (report.total_mass == 0) return out;
  for (int i = 0; i < report.n; ++i) {
    const Mass e = report.players[i].min_win_mass;
    if (e.is_finite())
      out[i] = static_cast<double>(report.total_mass - e.value()) /
               static_cast<double>(report.total_mass);
  }
  return out;
}

/// C_W(i) = (n - Width(i)) / n; zero when no winning coalition contains i.
inline std::vector<double> width_centrality(const GameReport& report) {
  std::vector<double> out(report.n, 0.0);
  for (int i = 0; i < report.n; ++i) {
    const int w = report.players[i].min_win_card;
    if (w != PlayerTally::kNoWinningCoalition)
      out[i] = static_cast<double>(report.n - w) / static_cast<double>(report.n);
  }
  return out;
}

struct PlayerFlags {
  bool dummy = false;
  bool vetoer = false;
  bool dictator = false;
};

/// dummy: never critical; vetoer: in every winning coalition; dictator:
/// vetoer whose singleton already wins.
inline PlayerFlags classify_player(const InfluenceGame& game,
                                   const GameReport& report, int i) {
  PlayerFlags f;
  const PlayerTally& t = report.players.at(i);
  f.dummy = t.eta == 0;
  f.vetoer = t.win_containing == report.total_winning;
  f.dictator = f.vetoer && is_winning(game, Coalition{i});
  return f;
}

}  // namespace influgame

#endif  // INFLUGAME_EXACT_HPP
