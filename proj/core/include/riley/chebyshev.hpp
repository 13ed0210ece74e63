#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace riley {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {

template <class T>
struct is_complex : std::false_type {};
template <class T>
struct is_complex<std::complex<T>> : std::true_type {};

template <class T>
inline constexpr bool is_complex_v = is_complex<T>::value;

template <class T>
bool finite_scalar(const T& z) {
  if constexpr (std::is_floating_point_v<T>) {
    return std::isfinite(z);
  } else if constexpr (is_complex_v<T>) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  } else {
    return true;  // exact types have no non-finite values
  }
}

/// Converts an arbitrary-precision integer into the scalar type used
/// for evaluation, keeping full long-double precision where possible.
template <class T>
T bigint_cast(const boost::multiprecision::cpp_int& c) {
  if constexpr (std::is_same_v<T, boost::multiprecision::cpp_int>) {
    return c;
  } else if constexpr (std::is_floating_point_v<T>) {
    return c.template convert_to<T>();
  } else if constexpr (is_complex_v<T>) {
    return T(c.template convert_to<typename T::value_type>());
  } else {
    return T(c);
  }
}

}  // namespace detail

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients, coeffs()[i] being the coefficient of z^i. The zero
/// polynomial is the empty coefficient list; otherwise the last
/// coefficient is nonzero.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
  }

  bool is_zero() const { return coeffs_.empty(); }

  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// Coefficient of z^i, zero outside the stored range.
  const BigInt& coeff(int i) const {
    static const BigInt kZero{0};
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(i)];
  }

  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  IntPoly operator-() const {
    std::vector<BigInt> c(coeffs_);
    for (auto& v : c) v = -v;
    return IntPoly(std::move(c));
  }

  bool operator==(const IntPoly&) const = default;

  /// Horner evaluation. Exact for BigInt arguments.
  template <class T>
  T eval(const T& z) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * z + detail::bigint_cast<T>(*it);
    }
    return acc;
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

/// Exact coefficients of the Chebyshev polynomial of the second kind
/// S_k, defined by S_0 = 1, S_1 = z, S_k = z S_{k-1} - S_{k-2}, and
/// extended to negative indices by S_{-k} = -S_{k-2}.
IntPoly s_poly(int k);

/// S_k(z) by the three-term recursion, for any integer k and any
/// scalar type (floating, complex, BigInt, or anything with ring ops).
/// Non-finite floating/complex input is rejected.
template <class T>
T s_eval(int k, const T& z) {
  if (!detail::finite_scalar(z)) {
    throw std::domain_error("s_eval: non-finite argument");
  }
  if (k <= -1) {
    if (k == -1) return T(0);
    return T(0) - s_eval(-k - 2, z);
  }
  T prev = T(1);  // S_0
  if (k == 0) return prev;
  T cur = z;  // S_1
  for (int i = 2; i <= k; ++i) {
    T next = z * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// One root of S_k - S_{k-1}: value = 2 cos((2j-1)pi / (2k+1)),
/// 1 <= j <= k. Values for fixed k decrease strictly in j.
struct ThetaRoot {
  int k;
  int j;
  double theta;
  double value;
};

/// All k roots of S_k - S_{k-1}, ordered by j ascending. Requires k >= 1.
std::vector<ThetaRoot> s_diff_roots(int k);

}  // namespace riley
