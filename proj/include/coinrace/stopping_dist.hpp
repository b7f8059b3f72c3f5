#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "coinrace/exact_poly.hpp"
#include "coinrace/game.hpp"

namespace coinrace {

/// Distribution of the first turn at which a player reaches n points.
/// pmf[k] is P(tau = k) as a polynomial in p, for every k in [l, m].
struct TauDistribution {
  TurnBounds bounds;
  std::map<std::int64_t, Poly> pmf;

  const Poly& at(std::int64_t k) const { return pmf.at(k); }
};

/// P(tau = k) as an expanded polynomial.
///
/// With i_k and i_k* from head_thresholds, the win on turn k splits into
///   - a forced-head term C(k-1, i_k) p^(i_k+1) q^(k-i_k-1), kept only when
///     0 <= i_k <= k-1, and
///   - a mixed sum over j in [max(i_k+1, 0), min(i_k*, k-1)] of
///     C(k-1, j) p^j q^(k-j-1), where the last toss may land either way.
/// Clamping happens before a term is built; a zero binomial does not save a
/// negative exponent.
inline Poly tau_pmf(std::int64_t k, const NormalizedParams& params) {
  const auto th = head_thresholds(k, params);
  const std::int64_t last = k - 1;
  Poly out;
  if (th.forced >= 0 && th.forced <= last) {
    const auto i = static_cast<std::int64_t>(th.forced);
    out += bernoulli_term(binomial(last, i), i + 1, last - i);
  }
  const BigInt lo_big = th.forced + 1 < 0 ? BigInt(0) : BigInt(th.forced + 1);
  const BigInt hi_big = th.mixed_max > last ? BigInt(last) : th.mixed_max;
  if (lo_big <= hi_big) {
    const auto lo = static_cast<std::int64_t>(lo_big);
    const auto hi = static_cast<std::int64_t>(hi_big);
    for (std::int64_t j = lo; j <= hi; ++j) out += bernoulli_term(binomial(last, j), j, last - j);
  }
  return out;
}

namespace detail {

/// P(tau <= k) from the survival side: 1 - sum over i with k*alpha + i*beta < n
/// of C(k, i) p^i q^(k-i). Used only to localize a broken pmf.
inline Poly cumulative_by_survival(std::int64_t k, const NormalizedParams& params) {
  Poly survive;
  for (std::int64_t i = 0; i <= k; ++i) {
    if (k * params.alpha + i * params.beta < params.n) survive += bernoulli_term(binomial(k, i), i, k - i);
  }
  return Poly::constant(1) - survive;
}

}  // namespace detail

/// Builds pmf for every k in [l, m] and checks that the masses sum to the
/// constant polynomial 1.
inline TauDistribution tau_distribution(const NormalizedParams& params) {
  TauDistribution dist;
  dist.bounds = turn_bounds(params);
  Poly total;
  for (std::int64_t k = dist.bounds.l; k <= dist.bounds.m; ++k) {
    auto poly = tau_pmf(k, params);
    total += poly;
    dist.pmf.emplace(k, std::move(poly));
  }
  if (total != Poly::constant(1)) {
    Poly running;
    for (const auto& [k, poly] : dist.pmf) {
      running += poly;
      if (running != detail::cumulative_by_survival(k, params)) {
        throw InternalError("tau distribution for " + to_string(params) + " loses mass at k=" +
                            std::to_string(k) + ": pmf = " + to_string(poly));
      }
    }
    throw InternalError("tau distribution for " + to_string(params) + " does not sum to 1: " + to_string(total));
  }
  return dist;
}

inline TauDistribution tau_distribution(const GameParams& params) { return tau_distribution(normalize(params)); }

}  // namespace coinrace
