#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "riley/chebyshev.hpp"

namespace riley {

/// Exact bivariate polynomial sum c_{ij} q^i y^j with q = x^2 and
/// arbitrary-precision integer coefficients. Zero coefficients are
/// never stored.
class QYPoly {
 public:
  struct Key {
    int q;
    int y;
    auto operator<=>(const Key&) const = default;
  };
  using TermMap = std::map<Key, BigInt>;

  QYPoly() = default;
  explicit QYPoly(int c) {
    if (c != 0) terms_[{0, 0}] = c;
  }

  static QYPoly constant(BigInt c);
  static QYPoly monomial(int qexp, int yexp, BigInt c);
  static QYPoly q() { return monomial(1, 0, 1); }
  static QYPoly y() { return monomial(0, 1, 1); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Largest y (resp. q) exponent; -1 for the zero polynomial.
  int y_degree() const;
  int q_degree() const;

  /// Coefficient of q^i y^j (zero when the term is absent).
  BigInt coeff(int qexp, int yexp) const;

  /// The coefficient of y^{y_degree()} as a polynomial in q alone.
  QYPoly y_leading_coeff() const;

  QYPoly& operator+=(const QYPoly& rhs);
  QYPoly& operator-=(const QYPoly& rhs);
  QYPoly operator-() const;
  friend QYPoly operator+(QYPoly a, const QYPoly& b) { return a += b; }
  friend QYPoly operator-(QYPoly a, const QYPoly& b) { return a -= b; }
  friend QYPoly operator*(const QYPoly& a, const QYPoly& b);
  friend QYPoly operator*(const BigInt& c, const QYPoly& p);

  bool operator==(const QYPoly&) const = default;

  /// Evaluates sum c_{ij} q^i y^j. Exact for BigInt arguments.
  template <class T>
  T eval_qy(const T& q, const T& y) const {
    T acc(0);
    // Powers are rebuilt per term; exponents are desk-scale.
    for (const auto& [key, c] : terms_) {
      acc += detail::bigint_cast<T>(c) * pow_int(q, key.q) * pow_int(y, key.y);
    }
    return acc;
  }

  /// Evaluates at (x, y) by substituting q = x^2.
  template <class T>
  T eval_xy(const T& x, const T& y) const {
    return eval_qy(T(x * x), y);
  }

  /// Canonical JSON form: array of [i, j, coefficient-as-decimal-string]
  /// triples, sorted by (j, i) descending.
  std::string to_json_string() const;
  static QYPoly from_json_string(std::string_view text);

 private:
  template <class T>
  static T pow_int(T base, int e) {
    T acc(1);
    while (e > 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  void add_term(const Key& key, const BigInt& c);

  TermMap terms_;
};

}  // namespace riley
