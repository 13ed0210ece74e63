#include "riley/root_finder.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "riley/closed_form.hpp"
#include "riley/oracle.hpp"

namespace riley {

namespace {

using LD = long double;

int sgn(LD v) { return (v > 0.0L) - (v < 0.0L); }

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Bracket {
  LD lo, hi;
  LD flo, fhi;
};

// Bisects a sign-change bracket until its width is <= tol (tol = 0
// runs to the precision floor) or the iteration cap is hit.
template <class F>
Bracket bisect_to(F&& f, Bracket b, LD tol, int max_iters) {
  for (int i = 0; i < max_iters && (b.hi - b.lo) > tol; ++i) {
    LD mid = 0.5L * (b.lo + b.hi);
    if (mid <= b.lo || mid >= b.hi) break;
    LD fm = f(mid);
    if (fm == 0.0L) {
      mid += 0.125L * (b.hi - b.lo);
      if (mid >= b.hi) break;
      fm = f(mid);
      if (fm == 0.0L) break;
    }
    if (sgn(fm) == sgn(b.flo)) {
      b.lo = mid;
      b.flo = fm;
    } else {
      b.hi = mid;
      b.fhi = fm;
    }
  }
  return b;
}

struct Refined {
  double lo, hi;
  double y_star;
  double residual;
};

// Two-phase refinement: bisect to the configured tolerance (widened to
// stay representable in double), then polish toward the precision
// floor and pick the double inside the stored bracket minimizing |f|.
template <class F>
Refined refine_root(F&& f, Bracket b, const ScanConfig& cfg) {
  const LD scale = std::max(std::abs(b.lo), std::abs(b.hi));
  const LD tol1 = std::max(static_cast<LD>(cfg.bisect_tol), 1e-15L * scale);
  b = bisect_to(f, b, tol1, cfg.max_iters);
  const double lo_d = static_cast<double>(b.lo);
  const double hi_d = static_cast<double>(b.hi);

  const Bracket fine = bisect_to(f, b, 0.0L, 128);
  const double mid = static_cast<double>(0.5L * (fine.lo + fine.hi));
  const double cands[3] = {mid, std::nextafter(mid, lo_d),
                           std::nextafter(mid, hi_d)};
  double best = mid;
  LD best_abs = std::abs(f(static_cast<LD>(mid)));
  for (double c : cands) {
    if (!(c > lo_d && c < hi_d)) continue;
    const LD av = std::abs(f(static_cast<LD>(c)));
    if (av < best_abs) {
      best_abs = av;
      best = c;
    }
  }
  return Refined{lo_d, hi_d, best, static_cast<double>(best_abs)};
}

// Walks [lo, hi] at the given step and hands every sign-change bracket
// to sink; returns false when the sink asked to stop.
template <class F, class Sink>
bool emit_brackets(F&& f, LD lo, LD flo, LD hi, LD step, Sink&& sink) {
  LD yp = lo;
  LD fp = flo;
  for (long long i = 1;; ++i) {
    LD y = lo + static_cast<LD>(i) * step;
    const bool last = y >= hi;
    if (last) y = hi;
    LD fy = f(y);
    if (fy == 0.0L) {
      y += step * 1e-6L;
      fy = f(y);
    }
    if (sgn(fy) != sgn(fp)) {
      if (!sink(Bracket{yp, y, fp, fy})) return false;
    }
    yp = y;
    fp = fy;
    if (last) return true;
  }
}

// Walks the grid on (2, Y] and hands every sign-change bracket to sink.
// A strict local minimum of |f| between same-sign samples marks a
// possible crossing pair narrower than the grid; such windows are
// rescanned 32x finer.
template <class F, class Sink>
void grid_scan(F&& f, double upper, const ScanConfig& cfg, Sink&& sink) {
  const LD h = cfg.grid_step;
  const LD sub = h / 32.0L;
  LD y_prev = 2.0L + h * 1e-6L;
  LD f_prev = f(y_prev);
  if (f_prev == 0.0L) {
    y_prev += h * 1e-6L;
    f_prev = f(y_prev);
  }
  LD y_prev2 = 0.0L;
  LD f_prev2 = 0.0L;
  bool have2 = false;
  for (long long i = 1;; ++i) {
    LD y = 2.0L + static_cast<LD>(i) * h;
    bool last = false;
    if (y >= static_cast<LD>(upper)) {
      y = static_cast<LD>(upper);
      last = true;
    }
    LD fy = f(y);
    if (fy == 0.0L) {
      y += h * 1e-6L;
      fy = f(y);
    }
    if (sgn(fy) != sgn(f_prev)) {
      if (!sink(Bracket{y_prev, y, f_prev, fy})) return;
    } else if (have2 && sgn(f_prev2) == sgn(f_prev) &&
               std::abs(f_prev) < std::abs(f_prev2) &&
               std::abs(f_prev) < std::abs(fy)) {
      if (!emit_brackets(f, y_prev2, f_prev2, y, sub, sink)) return;
    }
    y_prev2 = y_prev;
    f_prev2 = f_prev;
    have2 = true;
    y_prev = y;
    f_prev = fy;
    if (last) return;
  }
}

}  // namespace

std::string RootCertificate::to_json_string() const {
  std::ostringstream os;
  os << "{\"n\":" << n << ",\"m\":" << m << ",\"r\":" << r << ",\"x0\":"
     << fmt17(x0) << ",\"y_star\":" << fmt17(y_star) << ",\"bracket\":["
     << fmt17(lo) << ',' << fmt17(hi) << "],\"residual\":" << fmt17(residual)
     << ",\"relation_residual\":" << fmt17(relation_residual) << '}';
  return os.str();
}

double y_upper_bound(const KnotParams& p, double x0, const ScanConfig& cfg) {
  cfg.validate();
  if (!std::isfinite(x0)) {
    throw std::domain_error("y_upper_bound: non-finite x0");
  }
  const int target = leading_term(p).sign;
  int consecutive = 0;
  for (double y = 4.0; y <= cfg.y_max_cap; y *= 2.0) {
    const LD v = riley_eval<LD>(p, static_cast<LD>(x0), static_cast<LD>(y));
    if (sgn(v) == target) {
      if (++consecutive == 3) return y;
    } else {
      consecutive = 0;
    }
  }
  throw ScanBoundError(
      "y_upper_bound: sign did not stabilize below y_max_cap");
}

std::vector<RootCertificate> scan_roots(const KnotParams& p, int r,
                                        const ScanConfig& cfg) {
  if (r < 2) throw std::invalid_argument("scan_roots: r must be >= 2");
  cfg.validate();
  const double x0 = 2.0 * std::cos(std::numbers::pi / r);
  const double upper = y_upper_bound(p, x0, cfg);
  const auto f = [&](LD y) {
    return riley_eval<LD>(p, static_cast<LD>(x0), y);
  };
  std::vector<RootCertificate> out;
  grid_scan(f, upper, cfg, [&](Bracket b) {
    const Refined rr = refine_root(f, b, cfg);
    RootCertificate cert;
    cert.n = p.n;
    cert.m = p.m;
    cert.r = r;
    cert.x0 = x0;
    cert.lo = rr.lo;
    cert.hi = rr.hi;
    cert.y_star = rr.y_star;
    cert.residual = rr.residual;
    cert.relation_residual =
        relation_residual(p, Cplx(x0), Cplx(cert.y_star));
    out.push_back(cert);
    return true;
  });
  return out;
}

std::optional<double> theta_seed(const KnotParams& p, double x0, int j,
                                 const ScanConfig& cfg) {
  if (p.n < 1) throw std::invalid_argument("theta_seed: requires n >= 1");
  if (j < 1 || j > p.n) {
    throw std::invalid_argument("theta_seed: j must be in [1, n]");
  }
  cfg.validate();
  const LD target = 2.0L * std::cos(static_cast<LD>(2 * j - 1) *
                                    std::numbers::pi_v<LD> /
                                    static_cast<LD>(2 * p.n + 1));
  const auto g = [&](LD y) {
    return beta_eval<LD>(p.m, static_cast<LD>(x0), y) - target;
  };
  const double upper = y_upper_bound(p, x0, cfg);
  std::optional<double> found;
  grid_scan(g, upper, cfg, [&](Bracket b) {
    found = refine_root(g, b, cfg).y_star;
    return false;  // first bracket scanning upward wins
  });
  return found;
}

double p_case4(int m, double x0, double y) {
  if (m < 1) throw std::invalid_argument("p_case4: m must be >= 1");
  const LD lx = x0;
  const LD ly = y;
  const LD q = lx * lx;
  const LD a = alpha_eval(lx, ly);
  return static_cast<double>((ly * ly - ly * q + q) * s_eval(m - 1, a) + ly -
                             q);
}

std::optional<double> case4_root(int m, double x0, const ScanConfig& cfg) {
  if (m < 1) throw std::invalid_argument("case4_root: m must be >= 1");
  cfg.validate();
  const LD lx = x0;
  const LD q = lx * lx;
  const auto f = [&](LD y) {
    return (y * y - y * q + q) * s_eval(m - 1, alpha_eval(lx, y)) + y - q;
  };
  Bracket b{2.0L, 4.0L, f(2.0L), f(4.0L)};
  if (!(b.flo < 0.0L)) return std::nullopt;
  while (b.fhi <= 0.0L) {
    b.lo = b.hi;
    b.flo = b.fhi;
    b.hi *= 2.0L;
    if (b.hi > static_cast<LD>(cfg.y_max_cap)) {
      throw ScanBoundError("case4_root: P stayed negative up to y_max_cap");
    }
    b.fhi = f(b.hi);
  }
  return refine_root(f, b, cfg).y_star;
}

}  // namespace riley
