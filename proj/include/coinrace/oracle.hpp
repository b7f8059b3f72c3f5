#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "coinrace/exact_poly.hpp"
#include "coinrace/game.hpp"

// Ground truth by enumeration. Nothing here may use the threshold formulas
// from game.hpp or stopping_dist.hpp; only the parameter types are shared.

namespace coinrace::oracle {

inline constexpr std::int64_t kMaxTurns = 20;

struct OracleDistribution {
  std::int64_t first = 0;  // smallest k with nonzero mass
  std::int64_t last = 0;   // largest k with nonzero mass
  std::map<std::int64_t, Poly> pmf;
};

namespace detail {

struct Enumerator {
  const NormalizedParams& params;
  // hits[k][h]: number of toss sequences first reaching n at toss k with h heads
  std::vector<std::vector<std::uint64_t>> hits;

  void walk(std::int64_t tosses, std::int64_t heads, const BigInt& points) {
    if (points >= params.n) {
      ++hits[static_cast<std::size_t>(tosses)][static_cast<std::size_t>(heads)];
      return;
    }
    walk(tosses + 1, heads, points + params.alpha);
    walk(tosses + 1, heads + 1, points + params.alpha + params.beta);
  }
};

}  // namespace detail

/// Walks every toss sequence until it first reaches n points and collects
/// p^heads (1-p)^tails per hit time.
inline OracleDistribution brute_force_tau_pmf(const NormalizedParams& params) {
  if (params.n <= 0 || params.alpha <= 0 || params.beta <= 0) throw DomainError("parameters must be positive");
  if (params.n > kMaxTurns * params.alpha) {
    throw DomainError("oracle enumeration limited to games of at most " + std::to_string(kMaxTurns) + " turns");
  }
  detail::Enumerator e{params, std::vector<std::vector<std::uint64_t>>(
                                   kMaxTurns + 1, std::vector<std::uint64_t>(kMaxTurns + 1, 0))};
  e.walk(0, 0, BigInt(0));

  OracleDistribution out;
  for (std::int64_t k = 1; k <= kMaxTurns; ++k) {
    Poly poly;
    for (std::int64_t h = 0; h <= k; ++h) {
      const auto count = e.hits[static_cast<std::size_t>(k)][static_cast<std::size_t>(h)];
      if (count != 0) poly += bernoulli_term(BigInt(count), h, k - h);
    }
    if (poly.is_zero()) continue;
    if (out.pmf.empty()) out.first = k;
    out.last = k;
    out.pmf.emplace(k, std::move(poly));
  }
  return out;
}

/// (1 + sum_k pmf(k)(p)^2) / 2 from the enumerated distribution.
inline Rational brute_force_advantage(const OracleDistribution& dist, const Rational& p) {
  if (p < 0 || p > 1) throw DomainError("p must lie in [0, 1]");
  Rational tie = 0;
  for (const auto& [k, poly] : dist.pmf) {
    const Rational v = poly.eval(p);
    tie += v * v;
  }
  return (1 + tie) / 2;
}

inline Rational brute_force_advantage(const NormalizedParams& params, const Rational& p) {
  return brute_force_advantage(brute_force_tau_pmf(params), p);
}

}  // namespace coinrace::oracle
