#ifndef INFLUGAME_SAMPLING_HPP
#define INFLUGAME_SAMPLING_HPP

#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "influgame/game.hpp"

namespace influgame {

/// Monte Carlo estimate with per-player binomial standard errors. Identical
/// (game, samples, seed) inputs produce identical reports: samples are drawn
/// in fixed-size batches whose sub-seeds derive only from the master seed and
/// the batch index, so batches can run in any order or concurrently.
struct EstimateReport {
  std::vector<double> estimate;
  std::vector<double> std_error;
  std::vector<std::uint64_t> hits;  ///< integer numerators: estimate[i] == hits[i] / samples
  std::uint64_t samples = 0;
  std::uint64_t rng_seed = 0;
};

namespace detail {

constexpr std::uint64_t kBatchSize = 1024;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::mt19937_64 batch_rng(std::uint64_t master_seed, std::uint64_t batch) {
  return std::mt19937_64(splitmix64(master_seed ^ splitmix64(batch)));
}

inline EstimateReport finalize(std::vector<std::uint64_t> hits,
                               std::uint64_t samples, std::uint64_t seed) {
  EstimateReport report;
  report.samples = samples;
  report.rng_seed = seed;
  report.estimate.reserve(hits.size());
  report.std_error.reserve(hits.size());
  for (std::uint64_t h : hits) {
    const double p = static_cast<double>(h) / static_cast<double>(samples);
    report.estimate.push_back(p);
    report.std_error.push_back(std::sqrt(p * (1.0 - p) / static_cast<double>(samples)));
  }
  report.hits = std::move(hits);
  return report;
}

template <typename PerSample>
std::vector<std::uint64_t> sample_batches(int n, std::uint64_t samples,
                                          std::uint64_t seed, PerSample per_sample) {
  std::vector<std::uint64_t> hits(n, 0);
  std::uint64_t done = 0;
  for (std::uint64_t batch = 0; done < samples; ++batch) {
    auto rng = batch_rng(seed, batch);
    const std::uint64_t count = std::min(kBatchSize, samples - done);
    for (std::uint64_t k = 0; k < count; ++k) per_sample(rng, hits);
    done += count;
  }
  return hits;
}

}  // namespace detail

/// Estimates the raw (unnormalized) Banzhaf fraction eta(i) / 2^(n-1): the
/// probability that i is critical in S u {i} for S drawn uniformly from the
/// coalitions not containing i.
inline EstimateReport estimate_banzhaf_raw(const InfluenceGame& game,
                                           std::uint64_t samples,
                                           std::uint64_t rng_seed) {
  if (samples < 1) throw std::invalid_argument("need at least one sample");
  const int n = game.player_count();
  const int quota = game.quota();
  SpreadEngine engine(game.graph());
  const std::uint32_t full = n >= 32 ? ~0u : (1u << n) - 1u;
  auto hits = detail::sample_batches(
      n, samples, rng_seed,
      [&](std::mt19937_64& rng, std::vector<std::uint64_t>& h) {
        const std::uint32_t draw = static_cast<std::uint32_t>(rng()) & full;
        for (int i = 0; i < n; ++i) {
          const std::uint32_t without = draw & ~(1u << i);
          if (engine.reaches(without | (1u << i), quota) &&
              !engine.reaches(without, quota))
            ++h[i];
        }
      });
  return detail::finalize(std::move(hits), samples, rng_seed);
}

/// Estimates SS(i) as the fraction of uniformly random player orderings in
/// which i is pivotal. When the empty coalition loses and the grand
/// coalition wins, every ordering has exactly one pivot, so the estimates
/// sum to exactly 1.
inline EstimateReport estimate_shapley(const InfluenceGame& game,
                                       std::uint64_t permutations,
                                       std::uint64_t rng_seed) {
  if (permutations < 1) throw std::invalid_argument("need at least one permutation");
  const int n = game.player_count();
  const int quota = game.quota();
  SpreadEngine engine(game.graph());
  std::vector<int> perm(n);
  auto hits = detail::sample_batches(
      n, permutations, rng_seed,
      [&](std::mt19937_64& rng, std::vector<std::uint64_t>& h) {
        std::iota(perm.begin(), perm.end(), 0);
        for (int k = n - 1; k > 0; --k) {
          std::uniform_int_distribution<int> pick(0, k);
          std::swap(perm[k], perm[pick(rng)]);
        }
        if (engine.reaches(0, quota)) return;  // empty coalition already wins
        std::uint32_t prefix = 0;
        for (int k = 0; k < n; ++k) {
          prefix |= 1u << perm[k];
          if (engine.reaches(prefix, quota)) {
            ++h[perm[k]];
            return;
          }
        }
        // grand coalition loses: no pivot in this ordering
      });
  return detail::finalize(std::move(hits), permutations, rng_seed);
}

/// Estimates C_S(i): the probability over uniform coalitions X that i's
/// membership agrees with the outcome (member of a winner, or non-member of
/// a loser).
inline EstimateReport estimate_satisfaction(const InfluenceGame& game,
                                            std::uint64_t samples,
                                            std::uint64_t rng_seed) {
  if (samples < 1) throw std::invalid_argument("need at least one sample");
  const int n = game.player_count();
  const int quota = game.quota();
  SpreadEngine engine(game.graph());
  const std::uint32_t full = n >= 32 ? ~0u : (1u << n) - 1u;
  auto hits = detail::sample_batches(
      n, samples, rng_seed,
      [&](std::mt19937_64& rng, std::vector<std::uint64_t>& h) {
        const std::uint32_t draw = static_cast<std::uint32_t>(rng()) & full;
        const bool win = engine.reaches(draw, quota);
        for (int i = 0; i < n; ++i)
          if (((draw >> i) & 1u) == static_cast<std::uint32_t>(win)) ++h[i];
      });
  return detail::finalize(std::move(hits), samples, rng_seed);
}

}  // namespace influgame

#endif  // INFLUGAME_SAMPLING_HPP
