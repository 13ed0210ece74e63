#pragma once

#include "riley/chebyshev.hpp"
#include "riley/knot.hpp"
#include "riley/qypoly.hpp"

namespace riley {

namespace detail {

// Evaluation is carried out in a widened type so that the double-facing
// entry points keep a comfortable margin over the cross-check tolerances.
template <class T>
struct widen {
  using type = T;
};
template <>
struct widen<float> {
  using type = double;
};
template <>
struct widen<double> {
  using type = long double;
};
template <class U>
struct widen<std::complex<U>> {
  using type = std::complex<typename widen<U>::type>;
};

template <class T>
using widen_t = typename widen<T>::type;

template <class T>
widen_t<T> widen_value(const T& v) {
  if constexpr (is_complex_v<T>) {
    return widen_t<T>(v.real(), v.imag());
  } else {
    return widen_t<T>(v);
  }
}

template <class T>
T narrow_value(const widen_t<T>& v) {
  if constexpr (is_complex_v<T>) {
    using U = typename T::value_type;
    return T(static_cast<U>(v.real()), static_cast<U>(v.imag()));
  } else {
    return static_cast<T>(v);
  }
}

template <class T>
void require_finite(const T& v, const char* what) {
  if (!finite_scalar(v)) {
    throw std::domain_error(std::string(what) + ": non-finite argument");
  }
}

}  // namespace detail

/// alpha(x, y) = y^2 - x^2 y + 2 x^2 - 2, the trace of the commutator
/// rho(a b a^-1 b^-1). Written as (y^2 - 2) - x^2 (y - 2) so that
/// alpha(x, 2) == 2 exactly in floating point.
template <class T>
T alpha_eval(const T& x, const T& y) {
  return (y * y - T(2)) - x * x * (y - T(2));
}

/// alpha as an exact polynomial in (q, y), q = x^2.
QYPoly alpha_poly();

/// beta(x, y) = 2 + (x^2 - y - 2) (S_m(alpha) + (1 - y) S_{m-1}(alpha))^2,
/// the trace of rho(v). Requires m != 0.
template <class T>
T beta_eval(int m, const T& x, const T& y) {
  if (m == 0) throw std::invalid_argument("beta_eval: m must be non-zero");
  detail::require_finite(x, "beta_eval");
  detail::require_finite(y, "beta_eval");
  const T a = alpha_eval(x, y);
  const T e = s_eval(m, a) + (T(1) - y) * s_eval(m - 1, a);
  return T(2) + (x * x - y - T(2)) * e * e;
}

/// beta as an exact polynomial in (q, y); y-degree |4m+1| with leading
/// coefficient -1. Requires m != 0.
QYPoly beta_poly(int m);

inline constexpr int kDefaultExpansionLimit = 8;

/// The Riley polynomial R_{n,m}(x, y) of C(2n+1, 2m, 2), evaluated via
/// Chebyshev recursions at alpha and beta (no polynomial expansion).
/// Computation runs in a widened scalar type internally.
template <class T>
T riley_eval(const KnotParams& p, const T& x, const T& y) {
  detail::require_finite(x, "riley_eval");
  detail::require_finite(y, "riley_eval");
  using W = detail::widen_t<T>;
  const W wx = detail::widen_value(x);
  const W wy = detail::widen_value(y);
  const W a = alpha_eval(wx, wy);
  const W sm = s_eval(p.m, a);
  const W sm1 = s_eval(p.m - 1, a);
  const W sm2 = s_eval(p.m - 2, a);
  const W q = wx * wx;
  const W e = sm + (W(1) - wy) * sm1;
  const W beta = W(2) + (q - wy - W(2)) * e * e;
  const W c = q - wy - W(1);
  const W r = (c * sm - sm1) * s_eval(p.n, beta) -
              (c * sm1 - sm2) * s_eval(p.n - 1, beta);
  return detail::narrow_value<T>(r);
}

/// Exact expansion of R_{n,m} as a QYPoly. The y-degree grows like
/// |4m+1| |n|, so |n| and |m| are capped by expansion_limit.
QYPoly riley_poly(const KnotParams& p, int expansion_limit = kDefaultExpansionLimit);

/// R_{n,m}(x, 2) by the y = 2 specialization
///   m (beta - 2)(S_n(beta) - S_{n-1}(beta)) + S_{n+1}(beta) - S_n(beta)
/// with beta = x^2 - 2.
double riley_y2(const KnotParams& p, double x);

/// Same specialization with beta supplied directly (beta = x^2 - 2);
/// useful when beta is exactly representable, e.g. beta = 2cos(2pi/r)
/// for r = 3, 4, 6.
double riley_y2_beta(const KnotParams& p, double beta);

/// Factored form valid where S_n(beta) = S_{n-1}(beta):
///   (x^2 - y - 2) [S_m(alpha) + (1 - y) S_{m-1}(alpha)] S_n(beta).
/// Throws std::domain_error when |S_n(beta) - S_{n-1}(beta)| > tol.
double riley_factored_at_theta(const KnotParams& p, double x, double y,
                               double tol = 1e-6);

/// y-degree and sign of the top y-term of R_{n,m}; the leading
/// y-coefficient is a constant in q.
struct LeadingTerm {
  int degree;
  int sign;  // +1 or -1
};

/// Closed-form leading term. For n >= 1:
///   m >= 1: degree 2m+1 + (4m+1) n,   sign (-1)^{n+1}
///   m <= -1: degree -2(m+1) + (-4m-1) n, sign (-1)^n
/// For n <= -1 the formulas below were derived from the exact
/// expansion (the dominant product is the S_{n-1}(beta) one):
///   m >= 1: degree 2m-1 + (4m+1)(-n-1),  sign (-1)^n
///   m <= -1: degree -2m + (-4m-1)(-n-1), sign (-1)^{n+1}
LeadingTerm leading_term(const KnotParams& p);

}  // namespace riley
