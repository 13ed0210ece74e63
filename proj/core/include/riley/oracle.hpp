#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "riley/knot.hpp"

namespace riley {

/// Generator letters of the two-bridge knot group presentation
/// <a, b | wa = bw>. Upper case denotes the inverse.
enum class Letter : std::uint8_t { a, A, b, B };

Letter inverse(Letter l);

/// A word in the free group on {a, b}, stored as a letter sequence.
struct GroupWord {
  std::vector<Letter> letters;

  std::size_t size() const { return letters.size(); }
  bool operator==(const GroupWord&) const = default;
};

GroupWord concat(const GroupWord& lhs, const GroupWord& rhs);
GroupWord inverse_word(const GroupWord& w);
GroupWord word_pow(const GroupWord& w, int k);
GroupWord free_reduce(const GroupWord& w);

/// v = (a b a^-1 b^-1)^m a (a b a^-1 b^-1)^-m b; length 8|m| + 2.
GroupWord build_v(int m);

/// w = v^n (a b a^-1 b^-1)^m a b; length |n| (8|m| + 2) + 4|m| + 2.
GroupWord build_w(const KnotParams& p);

using Cplx = std::complex<double>;

/// 2x2 complex matrix; every matrix produced by rho_eval is a product
/// of determinant-one generators.
struct Mat2 {
  Cplx e11{1.0}, e12{0.0}, e21{0.0}, e22{1.0};

  static Mat2 identity() { return Mat2{}; }
  Cplx trace() const { return e11 + e22; }
  Cplx det() const { return e11 * e22 - e12 * e21; }
  /// Inverse assuming det = 1.
  Mat2 inv_unimodular() const { return Mat2{e22, -e12, -e21, e11}; }

  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    return Mat2{a.e11 * b.e11 + a.e12 * b.e21, a.e11 * b.e12 + a.e12 * b.e22,
                a.e21 * b.e11 + a.e22 * b.e21, a.e21 * b.e12 + a.e22 * b.e22};
  }
  friend Mat2 operator-(const Mat2& a, const Mat2& b) {
    return Mat2{a.e11 - b.e11, a.e12 - b.e12, a.e21 - b.e21, a.e22 - b.e22};
  }

  double max_abs() const;
};

/// The representation parameters: x = tr rho(a) = t + 1/t and
/// y = tr rho(a b^-1) = u + 2.
struct RepPoint {
  Cplx x;
  Cplx y;
  Cplx t;
  Cplx u;
};

/// Picks t as the root of t^2 - x t + 1 = 0 with nonnegative imaginary
/// part; when both roots are real, the one with |t| >= 1.
RepPoint make_rep_point(Cplx x, Cplx y);

/// rho(a) = [[t, 1], [0, 1/t]], rho(b) = [[t, 0], [-u, 1/t]].
Mat2 generator_matrix(Letter l, const RepPoint& pt);

/// Literal ordered product of generator matrices.
Mat2 rho_eval(const GroupWord& w, const RepPoint& pt);

/// R = w11 + (1/t - t) w12 where w_ij are the entries of rho(w).
Cplx riley_from_matrices_at(const KnotParams& p, const RepPoint& pt);
Cplx riley_from_matrices(const KnotParams& p, Cplx x, Cplx y);

/// Max-entry absolute difference || rho(w) rho(a) - rho(b) rho(w) ||;
/// near zero exactly on the character variety.
double relation_residual(const KnotParams& p, Cplx x, Cplx y);

/// V^k by literal repeated multiplication (negative k via the inverse).
Mat2 mat_pow(const Mat2& v, int k);

/// V^k via S_k(tr V); cross-check path for mat_pow, never used by
/// rho_eval.
Mat2 mat_pow_chebyshev(const Mat2& v, int k);

}  // namespace riley
