#pragma once

#include <stdexcept>

namespace riley {

/// Twist parameters of the rational knot C(2n+1, 2m, 2). Both must be
/// non-zero.
struct KnotParams {
  int n;
  int m;

  KnotParams(int n_, int m_) : n(n_), m(m_) {
    if (n == 0 || m == 0) {
      throw std::invalid_argument("KnotParams: n and m must be non-zero");
    }
  }
};

}  // namespace riley
