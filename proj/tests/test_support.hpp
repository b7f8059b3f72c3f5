#pragma once

#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "coinrace/exact_poly.hpp"
#include "coinrace/game.hpp"

namespace coinrace::testing {

/// Hand-rolled generators for property tests; every test seeds its own.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  Rational rational(std::int64_t lo, std::int64_t hi, std::int64_t max_den) {
    const auto den = integer(1, max_den);
    return Rational(integer(lo * den, hi * den), den);
  }

  Rational positive_rational(std::int64_t max_num, std::int64_t max_den) {
    return Rational(integer(1, max_num), integer(1, max_den));
  }

  Rational unit_rational(std::int64_t max_den) {
    const auto den = integer(1, max_den);
    return Rational(integer(0, den), den);
  }

  Poly poly(std::size_t max_degree, std::int64_t bound) {
    std::vector<Rational> c(static_cast<std::size_t>(integer(0, static_cast<std::int64_t>(max_degree)) + 1));
    for (auto& x : c) x = integer(-bound, bound);
    return Poly(std::move(c));
  }

  GameParams game(std::int64_t max_num, std::int64_t max_den) {
    return {positive_rational(max_num, max_den), positive_rational(max_num, max_den),
            positive_rational(max_num, max_den)};
  }

  double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(rng_); }

 private:
  std::mt19937_64 rng_;
};

struct FixtureRow {
  int table = 0;
  std::int64_t n = 0;
  std::int64_t alpha = 0;
  std::int64_t beta = 0;
  std::vector<BigInt> coefficients;
};

inline std::string fixture_path(const std::string& name) { return std::string(COINRACE_FIXTURE_DIR) + "/" + name; }

/// Parses "table n alpha beta : c0 c1 ..." lines; '#' starts a comment.
inline std::vector<FixtureRow> load_advantage_tables() {
  std::ifstream in(fixture_path("advantage_tables.txt"));
  if (!in) throw std::runtime_error("missing fixture advantage_tables.txt");
  std::vector<FixtureRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto colon = line.find(':');
    std::istringstream head(line.substr(0, colon));
    std::istringstream tail(line.substr(colon + 1));
    FixtureRow row;
    head >> row.table >> row.n >> row.alpha >> row.beta;
    std::string tok;
    while (tail >> tok) row.coefficients.emplace_back(tok);
    rows.push_back(std::move(row));
  }
  return rows;
}

struct PublishedMinimum {
  std::int64_t n = 0;
  std::int64_t alpha = 0;
  std::int64_t beta = 0;
  double at_pn_star = 0;
  double at_p_star = 0;
  bool pn_checked = true;
  bool pstar_checked = true;
};

inline std::vector<PublishedMinimum> load_minimized_advantages() {
  std::ifstream in(fixture_path("minimized_advantages.csv"));
  if (!in) throw std::runtime_error("missing fixture minimized_advantages.csv");
  std::vector<PublishedMinimum> rows;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<std::string> f;
    std::istringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (f.size() != 7) throw std::runtime_error("bad fixture line: " + line);
    rows.push_back({std::stoll(f[0]), std::stoll(f[1]), std::stoll(f[2]), std::stod(f[3]), std::stod(f[4]),
                    f[5] == "check", f[6] == "check"});
  }
  return rows;
}

inline Poly fixture_poly(const FixtureRow& row) { return Poly::from_integers(row.coefficients); }

}  // namespace coinrace::testing
