#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "coinrace/exact_poly.hpp"

// Exact real-root isolation on (0, 1) for polynomials with rational
// coefficients: square-free reduction, Descartes bisection with Taylor
// shifts, then sign bisection to a requested width. No floating point.

namespace coinrace::roots {

/// Quotient and remainder of a / b over the rationals.
inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const auto& den = b.coefficients();
  const std::size_t db = den.size() - 1;
  if (rem.size() < den.size()) return {Poly{}, a};
  std::vector<Rational> quot(rem.size() - db);
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i] == 0) continue;
    Rational q = rem[i] / den[db];
    quot[i - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= q * den[j];
  }
  rem.resize(db);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

inline Poly make_monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p * (Rational(1) / p.coefficients().back());
}

/// Integer coefficients with the same roots and sign pattern, content removed.
inline std::vector<BigInt> primitive_integer_coefficients(const Poly& f) {
  BigInt den = 1;
  for (const auto& c : f.coefficients()) den = boost::multiprecision::lcm(den, denominator_of(c));
  std::vector<BigInt> out;
  out.reserve(f.coefficients().size());
  BigInt content = 0;
  for (const auto& c : f.coefficients()) {
    out.push_back(numerator_of(c) * (den / denominator_of(c)));
    content = boost::multiprecision::gcd(content, out.back());
  }
  if (content > 1) {
    for (auto& c : out) c /= content;
  }
  return out;
}

namespace detail {

inline void strip(std::vector<BigInt>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline void remove_content(std::vector<BigInt>& a) {
  BigInt g = 0;
  for (const auto& c : a) g = boost::multiprecision::gcd(g, c);
  if (g > 1) {
    for (auto& c : a) c /= g;
  }
}

/// Remainder of a by b up to a nonzero constant factor, kept primitive.
inline std::vector<BigInt> primitive_remainder(std::vector<BigInt> a, const std::vector<BigInt>& b) {
  const std::size_t db = b.size() - 1;
  const BigInt& lead = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    const BigInt top = a.back();
    for (auto& c : a) c *= lead;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= top * b[j];
    strip(a);
    remove_content(a);
  }
  return a;
}

constexpr std::uint64_t kModulus = 2305843009213693951ULL;  // 2^61 - 1, prime

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kModulus);
}

inline std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e > 0; e >>= 1, a = mul_mod(a, a)) {
    if (e & 1) r = mul_mod(r, a);
  }
  return r;
}

inline std::vector<std::uint64_t> reduce_mod(const std::vector<BigInt>& a) {
  std::vector<std::uint64_t> out;
  out.reserve(a.size());
  for (const auto& c : a) {
    BigInt r = c % kModulus;
    if (r < 0) r += kModulus;
    out.push_back(static_cast<std::uint64_t>(r));
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

/// True when gcd(a, b) is certainly constant over the rationals: the image
/// mod a prime keeps both degrees and has a constant gcd there.
inline bool coprime_mod_prime(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  auto x = reduce_mod(a);
  auto y = reduce_mod(b);
  if (x.size() != a.size() || y.size() != b.size()) return false;
  if (x.size() < y.size()) std::swap(x, y);
  while (y.size() > 1) {
    const std::uint64_t inv = pow_mod(y.back(), kModulus - 2);
    while (x.size() >= y.size()) {
      const std::uint64_t q = mul_mod(x.back(), inv);
      const std::size_t shift = x.size() - y.size();
      for (std::size_t j = 0; j < y.size(); ++j) {
        x[shift + j] = (x[shift + j] + kModulus - mul_mod(q, y[j])) % kModulus;
      }
      while (!x.empty() && x.back() == 0) x.pop_back();
    }
    std::swap(x, y);
  }
  return y.size() == 1;
}

}  // namespace detail

/// Monic greatest common divisor; gcd(0, 0) = 0. Runs a primitive
/// remainder sequence over the integers to keep coefficients small.
inline Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  auto x = primitive_integer_coefficients(a);
  auto y = primitive_integer_coefficients(b);
  if (detail::coprime_mod_prime(x, y)) return Poly::constant(1);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    auto r = detail::primitive_remainder(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return make_monic(Poly::from_integers(x));
}

/// f / gcd(f, f'): same roots, all simple.
inline Poly square_free_part(const Poly& f) {
  if (f.is_zero() || f.degree() == 0u) return f;
  const Poly g = gcd(f, f.derivative());
  if (g.degree() == 0u) return f;
  return divmod(f, g).first;
}

/// Sign of f(x); evaluates the homogenized form sum a_i num^i den^(d-i).
inline int sign_at(const std::vector<BigInt>& f, const Rational& x) {
  if (f.empty()) return 0;
  const BigInt num = numerator_of(x);
  const BigInt den = denominator_of(x);
  BigInt acc = f.back();
  BigInt pw = den;
  for (std::size_t i = f.size() - 1; i-- > 0;) {
    acc = acc * num + f[i] * pw;
    pw *= den;
  }
  return acc > 0 ? 1 : (acc < 0 ? -1 : 0);
}

namespace detail {

inline void taylor_shift_one(std::vector<BigInt>& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j-- > i;) a[j] += a[j + 1];
  }
}

inline int sign_variations(const std::vector<BigInt>& a) {
  int count = 0;
  int last = 0;
  for (const auto& c : a) {
    const int s = c > 0 ? 1 : (c < 0 ? -1 : 0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

/// Upper bound on roots in (0, 1): variations of (x+1)^d Q(1/(x+1)).
inline int descartes_bound(const std::vector<BigInt>& q) {
  std::vector<BigInt> r(q.rbegin(), q.rend());
  taylor_shift_one(r);
  return sign_variations(r);
}

}  // namespace detail

/// A root of f lies in the open interval (lo, hi), or exactly at lo when
/// `exact` is set (then lo == hi).
struct RootBracket {
  Rational lo;
  Rational hi;
  bool exact = false;

  Rational point() const { return exact ? lo : Rational((lo + hi) / 2); }
};

/// Isolates the roots of a square-free polynomial in the open interval
/// (0, 1). Brackets come back sorted, disjoint, and each holds exactly one root.
inline std::vector<RootBracket> isolate_square_free(const Poly& sf) {
  if (sf.is_zero()) throw DomainError("cannot isolate roots of the zero polynomial");
  std::vector<RootBracket> out;
  if (sf.degree() == 0u) return out;

  struct Task {
    std::vector<BigInt> q;  // 2^(k d) sf((c + x) / 2^k)
    BigInt c;
    unsigned k;
  };
  std::vector<Task> stack;
  stack.push_back({primitive_integer_coefficients(sf), 0, 0});
  while (!stack.empty()) {
    Task t = std::move(stack.back());
    stack.pop_back();
    const int v = detail::descartes_bound(t.q);
    if (v == 0) continue;
    const BigInt scale = BigInt(1) << t.k;
    if (v == 1) {
      out.push_back({Rational(t.c, scale), Rational(t.c + 1, scale), false});
      continue;
    }
    const std::size_t d = t.q.size() - 1;
    std::vector<BigInt> left(t.q.size());
    for (std::size_t i = 0; i <= d; ++i) left[i] = t.q[i] << static_cast<unsigned>(d - i);
    std::vector<BigInt> right = left;
    detail::taylor_shift_one(right);
    if (right.front() == 0) out.push_back({Rational(2 * t.c + 1, 2 * scale), Rational(2 * t.c + 1, 2 * scale), true});
    detail::remove_content(left);
    detail::remove_content(right);
    stack.push_back({std::move(left), 2 * t.c, t.k + 1});
    stack.push_back({std::move(right), 2 * t.c + 1, t.k + 1});
  }
  std::sort(out.begin(), out.end(), [](const RootBracket& a, const RootBracket& b) { return a.lo < b.lo; });
  return out;
}

/// Same as isolate_square_free after reducing f to its square-free part.
inline std::vector<RootBracket> isolate_unit_interval(const Poly& f) {
  if (f.is_zero()) throw DomainError("cannot isolate roots of the zero polynomial");
  return isolate_square_free(square_free_part(f));
}

/// Shrinks a single-root bracket of f to width <= max_width by bisection on
/// exact signs. f must be square-free on the bracket.
inline RootBracket refine(const Poly& f, RootBracket b, const Rational& max_width) {
  if (max_width <= 0) throw DomainError("refine: width must be positive");
  if (b.exact) return b;
  const auto coeffs = primitive_integer_coefficients(f);
  const auto dcoeffs = primitive_integer_coefficients(f.derivative());
  // Sign just to the right of lo; at a simple root that is the sign of f'.
  int inner = sign_at(coeffs, b.lo);
  if (inner == 0) inner = sign_at(dcoeffs, b.lo);
  while (b.hi - b.lo > max_width) {
    Rational mid = (b.lo + b.hi) / 2;
    const int s = sign_at(coeffs, mid);
    if (s == 0) return {mid, mid, true};
    if (s == inner) {
      b.lo = mid;
    } else {
      b.hi = mid;
    }
  }
  return b;
}

}  // namespace coinrace::roots
