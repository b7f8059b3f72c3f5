#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace coinrace {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised for inputs outside an operation's mathematical domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an internal identity fails. Always a bug, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline bool is_integer(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

inline BigInt numerator_of(const Rational& r) {
  return boost::multiprecision::numerator(r);
}

inline BigInt denominator_of(const Rational& r) {
  return boost::multiprecision::denominator(r);
}

/// ceil(a / b) for b > 0, exact.
inline BigInt ceil_div(const BigInt& a, const BigInt& b) {
  if (b <= 0) throw DomainError("ceil_div: divisor must be positive");
  BigInt q = a / b;  // truncates toward zero
  if (a % b != 0 && a > 0) ++q;
  return q;
}

/// Binomial coefficient C(n, r); zero whenever r < 0 or r > n.
inline BigInt binomial(std::int64_t n, std::int64_t r) {
  if (n < 0) throw DomainError("binomial: n must be nonnegative");
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  BigInt acc = 1;
  for (std::int64_t i = 1; i <= r; ++i) {
    acc *= n - r + i;
    acc /= i;  // exact: acc is C(n-r+i, i) here
  }
  return acc;
}

/// Parses "a", "a/b", or a finite decimal such as "-2.5".
inline Rational parse_rational(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw DomainError("not a rational literal: '" + std::string(text) + "'");
  };
  if (text.empty()) return fail();
  auto digits_only = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  std::string_view body = text;
  bool negative = false;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!digits_only(num) || !digits_only(den)) return fail();
    BigInt d{std::string(den)};
    if (d == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    value = Rational(BigInt(std::string(num)), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) return fail();
    if ((!whole.empty() && !digits_only(whole)) || (!frac.empty() && !digits_only(frac))) return fail();
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
    BigInt w = whole.empty() ? BigInt(0) : BigInt(std::string(whole));
    BigInt f = frac.empty() ? BigInt(0) : BigInt(std::string(frac));
    value = Rational(w * scale + f, scale);
  } else {
    if (!digits_only(body)) return fail();
    value = Rational(BigInt(std::string(body)));
  }
  return negative ? Rational(-value) : value;
}

inline std::string to_string(const Rational& r) {
  return is_integer(r) ? numerator_of(r).str() : r.str();
}

/// Univariate polynomial in p with exact rational coefficients, ascending
/// powers. Trailing zeros are stripped, so the zero polynomial is empty.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
  Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }

  static Poly constant(Rational c) { return Poly(std::vector<Rational>{std::move(c)}); }

  static Poly monomial(Rational c, std::size_t power) {
    std::vector<Rational> v(power + 1);
    v[power] = std::move(c);
    return Poly(std::move(v));
  }

  static Poly from_integers(const std::vector<BigInt>& coeffs) {
    return Poly(std::vector<Rational>(coeffs.begin(), coeffs.end()));
  }

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }

  /// Coefficient of p^i; zero beyond the degree.
  Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

  bool has_integer_coefficients() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return is_integer(c); });
  }

  Rational eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
  Rational operator()(const Rational& x) const { return eval(x); }

  Poly derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<std::int64_t>(i);
    return Poly(std::move(out));
  }

  Poly& operator+=(const Poly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    normalize();
    return *this;
  }

  Poly& operator-=(const Poly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    normalize();
    return *this;
  }

  Poly& operator*=(const Rational& s) {
    if (s == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend Poly operator-(Poly a) { return a *= Rational(-1); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
  }
  Poly& operator*=(const Poly& other) { return *this = *this * other; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

inline Poly poly_add(const Poly& a, const Poly& b) { return a + b; }
inline Poly poly_mul(const Poly& a, const Poly& b) { return a * b; }
inline Rational poly_eval(const Poly& a, const Rational& x) { return a.eval(x); }
inline Poly poly_derivative(const Poly& a) { return a.derivative(); }

/// Expanded c * p^heads * (1 - p)^tails with integer coefficients.
inline Poly bernoulli_term(const BigInt& c, std::int64_t heads, std::int64_t tails) {
  if (heads < 0 || tails < 0) throw DomainError("bernoulli_term: negative exponent");
  std::vector<Rational> v(static_cast<std::size_t>(heads + tails + 1));
  for (std::int64_t r = 0; r <= tails; ++r) {
    BigInt term = c * binomial(tails, r);
    v[static_cast<std::size_t>(heads + r)] = (r % 2 == 0) ? Rational(term) : Rational(-term);
  }
  return Poly(std::move(v));
}

/// Ascending-power text such as "1 - 2p + 5p^2".
inline std::string to_string(const Poly& poly, char var = 'p') {
  const auto& c = poly.coefficients();
  if (c.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    Rational mag = c[i] < 0 ? Rational(-c[i]) : c[i];
    if (first) {
      if (c[i] < 0) out += "-";
    } else {
      out += c[i] < 0 ? " - " : " + ";
    }
    first = false;
    if (i == 0 || mag != 1) out += to_string(mag);
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Poly& poly) { return os << to_string(poly); }

}  // namespace coinrace
