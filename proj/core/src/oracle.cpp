#include "riley/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "riley/chebyshev.hpp"

namespace riley {

namespace {

GroupWord commutator() {
  return GroupWord{{Letter::a, Letter::b, Letter::A, Letter::B}};
}

}  // namespace

Letter inverse(Letter l) {
  switch (l) {
    case Letter::a:
      return Letter::A;
    case Letter::A:
      return Letter::a;
    case Letter::b:
      return Letter::B;
    case Letter::B:
      return Letter::b;
  }
  throw std::logic_error("inverse: bad letter");
}

GroupWord concat(const GroupWord& lhs, const GroupWord& rhs) {
  GroupWord out = lhs;
  out.letters.insert(out.letters.end(), rhs.letters.begin(),
                     rhs.letters.end());
  return out;
}

GroupWord inverse_word(const GroupWord& w) {
  GroupWord out;
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    out.letters.push_back(inverse(*it));
  }
  return out;
}

GroupWord word_pow(const GroupWord& w, int k) {
  const GroupWord base = k >= 0 ? w : inverse_word(w);
  const std::size_t reps = static_cast<std::size_t>(std::abs(k));
  GroupWord out;
  out.letters.reserve(reps * base.letters.size());
  for (std::size_t i = 0; i < reps; ++i) {
    out.letters.insert(out.letters.end(), base.letters.begin(),
                       base.letters.end());
  }
  return out;
}

GroupWord free_reduce(const GroupWord& w) {
  GroupWord out;
  out.letters.reserve(w.letters.size());
  for (Letter l : w.letters) {
    if (!out.letters.empty() && out.letters.back() == inverse(l)) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

GroupWord build_v(int m) {
  if (m == 0) throw std::invalid_argument("build_v: m must be non-zero");
  const GroupWord c = commutator();
  GroupWord v = word_pow(c, m);
  v.letters.push_back(Letter::a);
  const GroupWord cinv = word_pow(c, -m);
  v.letters.insert(v.letters.end(), cinv.letters.begin(), cinv.letters.end());
  v.letters.push_back(Letter::b);
  return v;
}

GroupWord build_w(const KnotParams& p) {
  GroupWord w = word_pow(build_v(p.m), p.n);
  const GroupWord cm = word_pow(commutator(), p.m);
  w.letters.insert(w.letters.end(), cm.letters.begin(), cm.letters.end());
  w.letters.push_back(Letter::a);
  w.letters.push_back(Letter::b);
  return w;
}

double Mat2::max_abs() const {
  return std::max({std::abs(e11), std::abs(e12), std::abs(e21), std::abs(e22)});
}

RepPoint make_rep_point(Cplx x, Cplx y) {
  if (!std::isfinite(x.real()) || !std::isfinite(x.imag()) ||
      !std::isfinite(y.real()) || !std::isfinite(y.imag())) {
    throw std::domain_error("make_rep_point: non-finite argument");
  }
  const Cplx d = std::sqrt(x * x - 4.0);
  const Cplx t1 = (x + d) / 2.0;
  const Cplx t2 = (x - d) / 2.0;
  const bool ok1 = t1.imag() >= 0.0;
  const bool ok2 = t2.imag() >= 0.0;
  Cplx t;
  if (ok1 && ok2) {
    t = std::abs(t1) >= std::abs(t2) ? t1 : t2;
  } else {
    t = ok1 ? t1 : t2;
  }
  return RepPoint{x, y, t, y - 2.0};
}

Mat2 generator_matrix(Letter l, const RepPoint& pt) {
  const Cplx t = pt.t;
  const Cplx ti = 1.0 / t;
  const Cplx u = pt.u;
  switch (l) {
    case Letter::a:
      return Mat2{t, 1.0, 0.0, ti};
    case Letter::A:
      return Mat2{ti, -1.0, 0.0, t};
    case Letter::b:
      return Mat2{t, 0.0, -u, ti};
    case Letter::B:
      return Mat2{ti, 0.0, u, t};
  }
  throw std::logic_error("generator_matrix: bad letter");
}

Mat2 rho_eval(const GroupWord& w, const RepPoint& pt) {
  Mat2 acc = Mat2::identity();
  for (Letter l : w.letters) acc = acc * generator_matrix(l, pt);
  return acc;
}

Cplx riley_from_matrices_at(const KnotParams& p, const RepPoint& pt) {
  const Mat2 w = rho_eval(build_w(p), pt);
  return w.e11 + (1.0 / pt.t - pt.t) * w.e12;
}

Cplx riley_from_matrices(const KnotParams& p, Cplx x, Cplx y) {
  return riley_from_matrices_at(p, make_rep_point(x, y));
}

double relation_residual(const KnotParams& p, Cplx x, Cplx y) {
  const RepPoint pt = make_rep_point(x, y);
  const Mat2 w = rho_eval(build_w(p), pt);
  const Mat2 a = generator_matrix(Letter::a, pt);
  const Mat2 b = generator_matrix(Letter::b, pt);
  return (w * a - b * w).max_abs();
}

Mat2 mat_pow(const Mat2& v, int k) {
  const Mat2 base = k >= 0 ? v : v.inv_unimodular();
  Mat2 acc = Mat2::identity();
  for (int i = 0; i < std::abs(k); ++i) acc = acc * base;
  return acc;
}

Mat2 mat_pow_chebyshev(const Mat2& v, int k) {
  const Cplx z = v.trace();
  const Cplx sk = s_eval(k, z);
  const Cplx sk1 = s_eval(k - 1, z);
  return Mat2{sk - v.e22 * sk1, v.e12 * sk1, v.e21 * sk1, sk - v.e11 * sk1};
}

}  // namespace riley
