#include "nuframe/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "nuframe/errors.hpp"

namespace nuframe {

QuadratureRule gauss_legendre(int M, double a, double b) {
  if (M < 1) throw Error(ErrorCode::DomainError, "quadrature needs at least one node");
  QuadratureRule rule;
  rule.nodes.resize(static_cast<std::size_t>(M));
  rule.weights.resize(static_cast<std::size_t>(M));
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  for (int i = 0; i < (M + 1) / 2; ++i) {
    // Newton iteration on P_M from the Chebyshev-like initial guess.
    double z = std::cos(std::numbers::pi * (i + 0.75) / (M + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = z;
      for (int k = 2; k <= M; ++k) {
        const double pk = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = M * (z * p1 - p0) / (z * z - 1.0);
      const double step = p1 / dp;
      z -= step;
      if (std::abs(step) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(M - 1 - i);
    rule.nodes[lo] = mid - half * z;
    rule.nodes[hi] = mid + half * z;
    rule.weights[lo] = half * w;
    rule.weights[hi] = half * w;
  }
  return rule;
}

}  // namespace nuframe
