#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "riley/knot.hpp"

namespace riley {

/// Raised when the doubling search for a stable-sign upper bound hits
/// the cap without stabilizing.
struct ScanBoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ScanConfig {
  double grid_step = 1e-3;
  double y_max_cap = 1e6;
  double bisect_tol = 1e-12;
  int max_iters = 200;

  void validate() const {
    if (grid_step <= 0 || y_max_cap <= 0 || bisect_tol <= 0 || max_iters <= 0) {
      throw std::invalid_argument("ScanConfig: all fields must be positive");
    }
    if (bisect_tol >= grid_step) {
      throw std::invalid_argument("ScanConfig: bisect_tol must be < grid_step");
    }
  }
};

/// A bracketed, refined real root y* > 2 of y -> R_{n,m}(x0, y) at
/// x0 = 2cos(pi/r), with residual evidence from both evaluation routes.
struct RootCertificate {
  int n = 0;
  int m = 0;
  int r = 0;
  double x0 = 0;
  double y_star = 0;
  double lo = 0;  // bracket, 2 < lo < y_star < hi, endpoint signs differ
  double hi = 0;
  double residual = 0;           // |R_{n,m}(x0, y_star)|
  double relation_residual = 0;  // || rho(w a) - rho(b w) || at (x0, y_star)

  /// All fields; decimal values printed with 17 significant digits.
  std::string to_json_string() const;
};

/// A height Y such that sign(R_{n,m}(x0, y)) agrees with the
/// leading-term sign for y = Y/4, Y/2, Y, found by doubling from 4.
/// Throws ScanBoundError when y_max_cap is reached first.
double y_upper_bound(const KnotParams& p, double x0,
                     const ScanConfig& cfg = {});

/// All sign-change roots of R_{n,m}(2cos(pi/r), y) on (2, Y], each
/// refined by bisection and cross-certified against the matrix oracle.
/// Ordered by y_star ascending; may be empty. Requires r >= 2.
std::vector<RootCertificate> scan_roots(const KnotParams& p, int r,
                                        const ScanConfig& cfg = {});

/// Seeks y0 > 2 with beta(m, x0, y0) = 2cos((2j-1)pi/(2n+1)), the j-th
/// root of S_n - S_{n-1}; the first bracket scanning upward is used.
/// Requires n >= 1 and 1 <= j <= n. Absence is a legitimate outcome.
std::optional<double> theta_seed(const KnotParams& p, double x0, int j,
                                 const ScanConfig& cfg = {});

/// P(y) = (y^2 - y x^2 + x^2) S_{m-1}(alpha) + y - x^2, the auxiliary
/// polynomial whose unique root y0 > 2 (when P(2) < 0) satisfies
/// S_m(alpha) + (1 - y0) S_{m-1}(alpha) = 1. Requires m >= 1.
double p_case4(int m, double x0, double y);

/// The unique root y0 > 2 of P when P(2) < 0, else absent.
std::optional<double> case4_root(int m, double x0,
                                 const ScanConfig& cfg = {});

}  // namespace riley
