#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <random>
#include <thread>
#include <vector>

#include "coinrace/game.hpp"
#include "coinrace/minimizer.hpp"

namespace coinrace {

/// Monte Carlo configuration. Each worker draws from its own std::mt19937_64
/// seeded with the worker-th output of SplitMix64 started at `seed`.
struct SimConfig {
  GameParams params;
  double p = 0.5;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

struct SimResult {
  std::uint64_t trials = 0;
  std::uint64_t wins = 0;
  double frequency = 0.0;
  double standard_error = 0.0;
  std::uint64_t seed = 0;
  // Signed hit turn: +k when player one wins on turn k, -k for player two.
  std::map<std::int64_t, std::uint64_t> turn_counts;

  std::map<std::int64_t, double> turn_histogram() const {
    std::map<std::int64_t, double> out;
    for (const auto& [turn, count] : turn_counts) out[turn] = static_cast<double>(count) / static_cast<double>(trials);
    return out;
  }

  friend bool operator==(const SimResult&, const SimResult&) = default;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t worker_seed(std::uint64_t seed, unsigned worker) {
  std::uint64_t state = seed;
  std::uint64_t out = 0;
  for (unsigned i = 0; i <= worker; ++i) out = splitmix64(state);
  return out;
}

/// Uniform on [0, 1) with 53 random bits; never returns 1.0.
inline double unit_uniform(std::mt19937_64& gen) { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

struct GameRules {
  std::int64_t n;
  std::int64_t alpha;
  std::int64_t beta;
};

inline GameRules integer_rules(const GameParams& params) {
  const auto norm = normalize(params);
  const BigInt limit = std::numeric_limits<std::int64_t>::max() / 4;
  if (norm.n > limit || norm.alpha > limit || norm.beta > limit) {
    throw DomainError("parameters too large for simulation after normalization: " + to_string(norm));
  }
  return {static_cast<std::int64_t>(norm.n), static_cast<std::int64_t>(norm.alpha),
          static_cast<std::int64_t>(norm.beta)};
}

/// One game; +turns if player one reaches n first, -turns otherwise.
inline std::int64_t play_game(const GameRules& rules, double p, std::mt19937_64& gen) {
  std::int64_t first = 0;
  std::int64_t second = 0;
  for (std::int64_t turns = 1;; ++turns) {
    first += rules.alpha;
    if (unit_uniform(gen) < p) first += rules.beta;
    if (first >= rules.n) return turns;
    second += rules.alpha;
    if (unit_uniform(gen) < p) second += rules.beta;
    if (second >= rules.n) return -turns;
  }
}

inline void validate(const SimConfig& config) {
  coinrace::validate(config.params);
  if (!(config.p >= 0.0 && config.p <= 1.0)) throw DomainError("p must lie in [0, 1]");
  if (config.trials < 1) throw DomainError("trials must be >= 1");
  if (config.workers < 1) throw DomainError("workers must be >= 1");
}

}  // namespace detail

/// Plays config.trials independent games. Bit-identical for a fixed
/// (seed, workers); different worker counts give different, equally valid
/// streams.
inline SimResult simulate(const SimConfig& config) {
  detail::validate(config);
  const auto rules = detail::integer_rules(config.params);
  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(config.workers, config.trials));

  std::vector<std::map<std::int64_t, std::uint64_t>> partial(workers);
  auto run = [&](unsigned w) {
    const std::uint64_t share = config.trials / workers + (w < config.trials % workers ? 1 : 0);
    std::mt19937_64 gen(detail::worker_seed(config.seed, w));
    auto& counts = partial[w];
    for (std::uint64_t i = 0; i < share; ++i) ++counts[detail::play_game(rules, config.p, gen)];
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }

  SimResult r;
  r.trials = config.trials;
  r.seed = config.seed;
  for (const auto& counts : partial) {
    for (const auto& [turn, count] : counts) {
      r.turn_counts[turn] += count;
      if (turn > 0) r.wins += count;
    }
  }
  r.frequency = static_cast<double>(r.wins) / static_cast<double>(r.trials);
  r.standard_error = std::sqrt(r.frequency * (1.0 - r.frequency) / static_cast<double>(r.trials));
  return r;
}

inline SimResult simulate_at_pstar(const GameParams& params, std::uint64_t trials, std::uint64_t seed,
                                   unsigned workers = 1) {
  validate(params);
  const auto opt = asymptotic_pstar(params.alpha, params.beta);
  return simulate({params, opt.p_star, trials, seed, workers});
}

}  // namespace coinrace
