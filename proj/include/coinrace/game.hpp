#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "coinrace/exact_poly.hpp"

namespace coinrace {

/// A game instance: first to n points wins; a toss awards alpha on tails
/// and alpha + beta on heads. All three values are exact positive rationals.
struct GameParams {
  Rational n;
  Rational alpha;
  Rational beta;

  friend bool operator==(const GameParams&, const GameParams&) = default;
};

/// Integer representative of a GameParams with gcd(n, alpha, beta) = 1.
/// Every threshold depends only on ratios, so this is the same game.
struct NormalizedParams {
  BigInt n;
  BigInt alpha;
  BigInt beta;

  friend bool operator==(const NormalizedParams&, const NormalizedParams&) = default;
};

/// Range of turn counts on which a player can first reach n points.
struct TurnBounds {
  std::int64_t l = 1;  // all heads
  std::int64_t m = 1;  // all tails

  friend bool operator==(const TurnBounds&, const TurnBounds&) = default;
};

/// Head-count thresholds for a win on turn k, unclamped.
struct HeadThresholds {
  BigInt forced;     // largest i with i*beta < n - k*alpha; the final toss must be a head
  BigInt mixed_max;  // largest i with i*beta < n - (k-1)*alpha; not yet won before turn k

  friend bool operator==(const HeadThresholds&, const HeadThresholds&) = default;
};

inline const GameParams& validate(const GameParams& params) {
  if (params.n <= 0) throw DomainError("n must be > 0");
  if (params.alpha <= 0) throw DomainError("alpha must be > 0");
  if (params.beta <= 0) throw DomainError("beta must be > 0");
  return params;
}

inline NormalizedParams normalize(const GameParams& raw) {
  const auto& params = validate(raw);
  BigInt den = boost::multiprecision::lcm(
      boost::multiprecision::lcm(denominator_of(params.n), denominator_of(params.alpha)),
      denominator_of(params.beta));
  BigInt n = numerator_of(params.n) * (den / denominator_of(params.n));
  BigInt a = numerator_of(params.alpha) * (den / denominator_of(params.alpha));
  BigInt b = numerator_of(params.beta) * (den / denominator_of(params.beta));
  BigInt g = boost::multiprecision::gcd(boost::multiprecision::gcd(n, a), b);
  return {n / g, a / g, b / g};
}

namespace detail {
inline std::int64_t to_turn_count(const BigInt& v) {
  if (v > std::numeric_limits<std::int32_t>::max()) {
    throw DomainError("game too long: turn count " + v.str() + " exceeds supported range");
  }
  return static_cast<std::int64_t>(v);
}
}  // namespace detail

inline TurnBounds turn_bounds(const NormalizedParams& params) {
  return {detail::to_turn_count(ceil_div(params.n, params.alpha + params.beta)),
          detail::to_turn_count(ceil_div(params.n, params.alpha))};
}

inline TurnBounds turn_bounds(const GameParams& params) { return turn_bounds(normalize(params)); }

/// ceil((n - k*alpha)/beta - 1) and ceil((n - (k-1)*alpha)/beta - 1).
/// Results may fall outside [0, k-1]; callers decide what to keep.
inline HeadThresholds head_thresholds(std::int64_t k, const NormalizedParams& params) {
  const auto bounds = turn_bounds(params);
  if (k < bounds.l || k > bounds.m) {
    throw DomainError("turn " + std::to_string(k) + " outside [" + std::to_string(bounds.l) + ", " +
                      std::to_string(bounds.m) + "]");
  }
  return {ceil_div(params.n - k * params.alpha, params.beta) - 1,
          ceil_div(params.n - (k - 1) * params.alpha, params.beta) - 1};
}

inline std::string to_string(const GameParams& p) {
  return "(n=" + to_string(p.n) + ", alpha=" + to_string(p.alpha) + ", beta=" + to_string(p.beta) + ")";
}

inline std::string to_string(const NormalizedParams& p) {
  return "(" + p.n.str() + ", " + p.alpha.str() + ", " + p.beta.str() + ")";
}

inline GameParams as_game(const NormalizedParams& p) {
  return {Rational(p.n), Rational(p.alpha), Rational(p.beta)};
}

}  // namespace coinrace
