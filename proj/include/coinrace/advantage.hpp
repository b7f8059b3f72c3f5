#pragma once

#include <string>

#include "coinrace/exact_poly.hpp"
#include "coinrace/game.hpp"
#include "coinrace/stopping_dist.hpp"

namespace coinrace {

/// The first player's winning probability I(p) as an exact polynomial.
struct AdvantageResult {
  NormalizedParams params;
  Poly poly;
  bool degenerate = false;  // l == m, I is identically 1
  TurnBounds bounds;
};

/// P(tau1 = tau2) = sum_k P(tau = k)^2; both players share one distribution.
inline Poly tie_probability(const TauDistribution& dist) {
  Poly sum;
  for (const auto& [k, poly] : dist.pmf) sum += poly * poly;
  return sum;
}

inline Poly tie_probability(const GameParams& params) { return tie_probability(tau_distribution(params)); }

namespace detail {

inline void check_advantage_laws(const AdvantageResult& r) {
  const std::string where = " for " + to_string(r.params);
  if (!r.poly.has_integer_coefficients()) {
    throw InternalError("non-integer coefficient in advantage polynomial" + where + ": " + to_string(r.poly));
  }
  if (r.poly.coefficient(0) != 1 || r.poly.eval(1) != 1) {
    throw InternalError("advantage polynomial is not 1 at both endpoints" + where);
  }
  const bool is_one = r.poly == Poly::constant(1);
  if (r.degenerate != is_one) {
    throw InternalError("degenerate flag disagrees with assembled polynomial" + where);
  }
  if (!r.degenerate && r.poly.degree() != static_cast<std::size_t>(2 * r.bounds.m - 2)) {
    throw InternalError("advantage degree " + std::to_string(r.poly.degree().value_or(0)) + " != 2m-2 = " +
                        std::to_string(2 * r.bounds.m - 2) + where);
  }
}

}  // namespace detail

inline AdvantageResult advantage_polynomial(const NormalizedParams& params) {
  AdvantageResult r;
  r.params = params;
  r.bounds = turn_bounds(params);
  r.degenerate = r.bounds.l == r.bounds.m;
  // Assembled even in the degenerate case so both paths are cross-checked.
  r.poly = (Poly::constant(1) + tie_probability(tau_distribution(params))) * Rational(1, 2);
  detail::check_advantage_laws(r);
  return r;
}

inline AdvantageResult advantage_polynomial(const GameParams& params) { return advantage_polynomial(normalize(params)); }

inline Rational advantage_at(const AdvantageResult& adv, const Rational& p) {
  if (p < 0 || p > 1) throw DomainError("p must lie in [0, 1], got " + to_string(p));
  return adv.poly.eval(p);
}

inline Rational advantage_at(const GameParams& params, const Rational& p) {
  if (p < 0 || p > 1) throw DomainError("p must lie in [0, 1], got " + to_string(p));
  return advantage_at(advantage_polynomial(params), p);
}

}  // namespace coinrace
