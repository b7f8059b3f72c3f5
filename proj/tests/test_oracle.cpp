#include <gtest/gtest.h>

#include "coinrace/oracle.hpp"

using namespace coinrace;
using namespace coinrace::oracle;

namespace {

Poly P(std::initializer_list<long long> c) {
  std::vector<Rational> v;
  for (auto x : c) v.emplace_back(x);
  return Poly(std::move(v));
}

}  // namespace

TEST(Oracle, EnumeratedDistributions) {
  const auto d = brute_force_tau_pmf({3, 1, 1});
  EXPECT_EQ(d.first, 2);
  EXPECT_EQ(d.last, 3);
  EXPECT_EQ(d.pmf.at(2), P({0, 2, -1}));
  EXPECT_EQ(d.pmf.at(3), P({1, -2, 1}));

  const auto one = brute_force_tau_pmf({2, 2, 1});
  EXPECT_EQ(one.first, 1);
  EXPECT_EQ(one.last, 1);
  EXPECT_EQ(one.pmf.at(1), P({1}));

  const auto wide = brute_force_tau_pmf({3, 1, 10});
  EXPECT_EQ(wide.pmf.at(1), P({0, 1}));
  EXPECT_EQ(wide.pmf.at(2), P({0, 1, -1}));
  EXPECT_EQ(wide.pmf.at(3), P({1, -2, 1}));
}

TEST(Oracle, Advantage) {
  EXPECT_EQ(brute_force_advantage({3, 1, 1}, Rational(1, 2)), Rational(13, 16));
  EXPECT_EQ(brute_force_advantage({3, 1, 1}, 0), 1);
  for (int i = 0; i <= 8; ++i) EXPECT_EQ(brute_force_advantage({2, 2, 1}, Rational(i, 8)), 1);
  EXPECT_THROW(brute_force_advantage({3, 1, 1}, Rational(3, 2)), DomainError);
}

TEST(Oracle, RejectsOversizedGames) {
  EXPECT_NO_THROW(brute_force_tau_pmf({20, 1, 1}));
  EXPECT_THROW(brute_force_tau_pmf({21, 1, 1}), DomainError);
}

TEST(OracleProperty, MassConservation) {
  for (std::int64_t n = 1; n <= 10; ++n)
    for (std::int64_t a = 1; a <= 4; ++a)
      for (std::int64_t b = 1; b <= 4; ++b) {
        Poly total;
        for (const auto& [k, poly] : brute_force_tau_pmf({n, a, b}).pmf) total += poly;
        EXPECT_EQ(total, Poly::constant(1));
      }
}
