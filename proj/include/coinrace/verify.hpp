#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "coinrace/game.hpp"
#include "coinrace/oracle.hpp"
#include "coinrace/stopping_dist.hpp"

namespace coinrace {

struct VerifyMismatch {
  std::int64_t n = 0;
  std::int64_t alpha = 0;
  std::int64_t beta = 0;
  std::int64_t k = 0;  // first differing turn; 0 when the supports differ
};

struct VerifyReport {
  std::size_t cases = 0;
  std::size_t matched = 0;
  std::vector<VerifyMismatch> mismatches;

  bool ok() const { return matched == cases; }
};

using DistributionBuilder = std::function<TauDistribution(const NormalizedParams&)>;

/// Compares the closed-form distribution with full enumeration on every
/// integer triple 1 <= n <= max_n, 1 <= alpha <= max_alpha, 1 <= beta <= max_beta.
inline VerifyReport verify_grid(std::int64_t max_n, std::int64_t max_alpha, std::int64_t max_beta,
                                const DistributionBuilder& build = [](const NormalizedParams& p) {
                                  return tau_distribution(p);
                                }) {
  if (max_n < 1 || max_alpha < 1 || max_beta < 1) throw DomainError("verify bounds must be >= 1");
  VerifyReport report;
  for (std::int64_t n = 1; n <= max_n; ++n) {
    for (std::int64_t a = 1; a <= max_alpha; ++a) {
      for (std::int64_t b = 1; b <= max_beta; ++b) {
        ++report.cases;
        // Raw triple on purpose: the analytic side must cope with non-coprime input.
        const NormalizedParams params{n, a, b};
        const auto expected = oracle::brute_force_tau_pmf(params);
        TauDistribution actual;
        try {
          actual = build(params);
        } catch (const InternalError&) {
          report.mismatches.push_back({n, a, b, 0});
          continue;
        }
        if (actual.bounds.l != expected.first || actual.bounds.m != expected.last) {
          report.mismatches.push_back({n, a, b, 0});
          continue;
        }
        std::int64_t bad = -1;
        for (std::int64_t k = expected.first; k <= expected.last && bad < 0; ++k) {
          const auto e = expected.pmf.find(k);
          const auto g = actual.pmf.find(k);
          const Poly ev = e == expected.pmf.end() ? Poly{} : e->second;
          const Poly gv = g == actual.pmf.end() ? Poly{} : g->second;
          if (ev != gv) bad = k;
        }
        if (bad >= 0) {
          report.mismatches.push_back({n, a, b, bad});
        } else {
          ++report.matched;
        }
      }
    }
  }
  return report;
}

}  // namespace coinrace
