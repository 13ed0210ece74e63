#include "riley/closed_form.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace riley {

namespace {

int parity_sign(int k) { return std::abs(k) % 2 == 0 ? 1 : -1; }

}  // namespace

QYPoly alpha_poly() {
  // y^2 - q y + 2q - 2
  QYPoly p = QYPoly::monomial(0, 2, 1);
  p -= QYPoly::monomial(1, 1, 1);
  p += QYPoly::monomial(1, 0, 2);
  p -= QYPoly::constant(2);
  return p;
}

QYPoly beta_poly(int m) {
  if (m == 0) throw std::invalid_argument("beta_poly: m must be non-zero");
  const QYPoly a = alpha_poly();
  const QYPoly e = s_eval(m, a) + (QYPoly(1) - QYPoly::y()) * s_eval(m - 1, a);
  return QYPoly(2) + (QYPoly::q() - QYPoly::y() - QYPoly(2)) * e * e;
}

QYPoly riley_poly(const KnotParams& p, int expansion_limit) {
  if (std::abs(p.n) > expansion_limit || std::abs(p.m) > expansion_limit) {
    throw std::domain_error(
        "riley_poly: expansion too large for |n|, |m| > " +
        std::to_string(expansion_limit));
  }
  const QYPoly a = alpha_poly();
  const QYPoly sm = s_eval(p.m, a);
  const QYPoly sm1 = s_eval(p.m - 1, a);
  const QYPoly sm2 = s_eval(p.m - 2, a);
  const QYPoly e = sm + (QYPoly(1) - QYPoly::y()) * sm1;
  const QYPoly beta =
      QYPoly(2) + (QYPoly::q() - QYPoly::y() - QYPoly(2)) * e * e;
  const QYPoly c = QYPoly::q() - QYPoly::y() - QYPoly(1);
  return (c * sm - sm1) * s_eval(p.n, beta) -
         (c * sm1 - sm2) * s_eval(p.n - 1, beta);
}

double riley_y2_beta(const KnotParams& p, double beta) {
  const long double b = beta;
  const long double m = p.m;
  const long double r = m * (b - 2.0L) * (s_eval(p.n, b) - s_eval(p.n - 1, b)) +
                        s_eval(p.n + 1, b) - s_eval(p.n, b);
  return static_cast<double>(r);
}

double riley_y2(const KnotParams& p, double x) {
  const long double lx = x;
  return riley_y2_beta(p, static_cast<double>(lx * lx - 2.0L));
}

double riley_factored_at_theta(const KnotParams& p, double x, double y,
                               double tol) {
  const long double lx = x;
  const long double ly = y;
  const long double a = alpha_eval(lx, ly);
  const long double beta = beta_eval(p.m, lx, ly);
  const long double sn = s_eval(p.n, beta);
  const long double diff = sn - s_eval(p.n - 1, beta);
  if (std::abs(static_cast<double>(diff)) > tol) {
    throw std::domain_error(
        "riley_factored_at_theta: precondition violated, S_n(beta) != "
        "S_{n-1}(beta) at this point");
  }
  const long double e = s_eval(p.m, a) + (1.0L - ly) * s_eval(p.m - 1, a);
  return static_cast<double>((lx * lx - ly - 2.0L) * e * sn);
}

LeadingTerm leading_term(const KnotParams& p) {
  const int n = p.n;
  const int m = p.m;
  if (n >= 1) {
    if (m >= 1) {
      return {2 * m + 1 + (4 * m + 1) * n, parity_sign(n + 1)};
    }
    return {-2 * (m + 1) + (-4 * m - 1) * n, parity_sign(n)};
  }
  if (m >= 1) {
    return {2 * m - 1 + (4 * m + 1) * (-n - 1), parity_sign(n)};
  }
  return {-2 * m + (-4 * m - 1) * (-n - 1), parity_sign(n + 1)};
}

}  // namespace riley
