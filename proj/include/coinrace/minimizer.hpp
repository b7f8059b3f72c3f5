#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "coinrace/advantage.hpp"
#include "coinrace/exact_poly.hpp"
#include "coinrace/game.hpp"
#include "coinrace/root_isolation.hpp"

namespace coinrace {

inline constexpr double kDefaultTolerance = 1e-9;

/// Global minimum of I(p) over [0, 1].
struct MinimizationResult {
  bool degenerate = false;
  std::optional<double> p_star_n;  // empty when degenerate
  Rational bracket_lo;             // the minimizer lies in [bracket_lo, bracket_hi]
  Rational bracket_hi;
  Rational exact_value = 1;        // I at the reported point, exact
  double value = 1.0;
  double tol = kDefaultTolerance;
  bool tie = false;                // another candidate reached the same exact value
  std::size_t critical_points = 0;
};

/// Candidates are both endpoints plus every distinct root of I' in (0, 1),
/// each bracketed to width tol. Candidates are compared exactly; ties go to
/// the smaller p.
inline MinimizationResult minimize_advantage(const AdvantageResult& adv, double tol = kDefaultTolerance) {
  if (!(tol > 0) || !std::isfinite(tol)) throw DomainError("tol must be > 0");
  MinimizationResult r;
  r.tol = tol;
  if (adv.degenerate) {
    r.degenerate = true;
    return r;
  }
  const Poly slope = adv.poly.derivative();
  const Poly simple = roots::square_free_part(slope);
  const Rational width(tol);

  std::vector<roots::RootBracket> candidates;
  candidates.push_back({0, 0, true});
  for (const auto& b : roots::isolate_square_free(simple)) candidates.push_back(roots::refine(simple, b, width));
  candidates.push_back({1, 1, true});
  r.critical_points = candidates.size() - 2;

  const roots::RootBracket* best = nullptr;
  Rational best_value;
  for (const auto& c : candidates) {
    Rational v = adv.poly.eval(c.point());
    if (best == nullptr || v < best_value) {
      best = &c;
      best_value = v;
      r.tie = false;
    } else if (v == best_value) {
      r.tie = true;
    }
  }
  r.bracket_lo = best->lo;
  r.bracket_hi = best->hi;
  r.p_star_n = static_cast<double>(best->point());
  r.exact_value = best_value;
  r.value = static_cast<double>(best_value);
  return r;
}

inline MinimizationResult minimize_advantage(const GameParams& params, double tol = kDefaultTolerance) {
  if (!(tol > 0) || !std::isfinite(tol)) throw DomainError("tol must be > 0");
  return minimize_advantage(advantage_polynomial(params), tol);
}

/// Large-n optimum p* = 1 + t - sqrt(1 + t + t^2), t = alpha / beta.
struct AsymptoticOptimum {
  Rational t;
  double p_star = 0.0;
  double sigma_sq_at_p_star = 0.0;
};

/// sigma^2(p) = (alpha + beta p)^3 / (beta^2 p (1 - p)).
inline double sigma_squared(double p, const Rational& alpha, const Rational& beta) {
  if (alpha <= 0 || beta <= 0) throw DomainError("alpha and beta must be > 0");
  if (!(p > 0.0 && p < 1.0)) throw DomainError("sigma_squared needs 0 < p < 1");
  const double a = static_cast<double>(alpha);
  const double b = static_cast<double>(beta);
  const double s = a + b * p;
  return s * s * s / (b * b * p * (1.0 - p));
}

/// d/dp ln sigma^2 = 3 beta / (alpha + beta p) - 1/p + 1/(1 - p).
inline double log_sigma_squared_slope(double p, const Rational& alpha, const Rational& beta) {
  const double a = static_cast<double>(alpha);
  const double b = static_cast<double>(beta);
  return 3.0 * b / (a + b * p) - 1.0 / p + 1.0 / (1.0 - p);
}

inline AsymptoticOptimum asymptotic_pstar(const Rational& alpha, const Rational& beta) {
  if (alpha <= 0) throw DomainError("alpha must be > 0");
  if (beta <= 0) throw DomainError("beta must be > 0");
  AsymptoticOptimum out;
  out.t = alpha / beta;
  const double t = static_cast<double>(out.t);
  // Same value as 1 + t - sqrt(1 + t + t^2), rationalized to avoid cancellation at large t.
  out.p_star = t / (1.0 + t + std::sqrt(1.0 + t + t * t));
  out.sigma_sq_at_p_star = sigma_squared(out.p_star, alpha, beta);
  return out;
}

/// Nearest multiple of 10^-12 to x.
inline Rational rational_approximation(double x) {
  const BigInt scale("1000000000000");
  const auto scaled = static_cast<std::int64_t>(std::llround(x * 1e12));
  return Rational(BigInt(scaled), scale);
}

/// I(p*) evaluated exactly at a 1e-12 rational approximation of p*.
inline double advantage_at_asymptotic(const AdvantageResult& adv, const Rational& alpha, const Rational& beta) {
  const auto opt = asymptotic_pstar(alpha, beta);
  return static_cast<double>(advantage_at(adv, rational_approximation(opt.p_star)));
}

inline double advantage_at_asymptotic(const GameParams& params) {
  validate(params);
  return advantage_at_asymptotic(advantage_polynomial(params), params.alpha, params.beta);
}

}  // namespace coinrace
