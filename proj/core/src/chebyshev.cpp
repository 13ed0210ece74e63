#include "riley/chebyshev.hpp"

#include <numbers>

namespace riley {

IntPoly s_poly(int k) {
  if (k <= -1) {
    if (k == -1) return IntPoly{};
    return -s_poly(-k - 2);
  }
  std::vector<BigInt> prev{1};     // S_0
  if (k == 0) return IntPoly(std::move(prev));
  std::vector<BigInt> cur{0, 1};   // S_1
  for (int i = 2; i <= k; ++i) {
    std::vector<BigInt> next(static_cast<std::size_t>(i) + 1);
    for (std::size_t d = 0; d < cur.size(); ++d) next[d + 1] = cur[d];
    for (std::size_t d = 0; d < prev.size(); ++d) next[d] -= prev[d];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return IntPoly(std::move(cur));
}

std::vector<ThetaRoot> s_diff_roots(int k) {
  if (k < 1) throw std::invalid_argument("s_diff_roots: k must be >= 1");
  std::vector<ThetaRoot> roots;
  roots.reserve(static_cast<std::size_t>(k));
  const double pi = std::numbers::pi;
  for (int j = 1; j <= k; ++j) {
    const double theta = (2.0 * j - 1.0) * pi / (2.0 * k + 1.0);
    roots.push_back(ThetaRoot{k, j, theta, 2.0 * std::cos(theta)});
  }
  return roots;
}

}  // namespace riley
