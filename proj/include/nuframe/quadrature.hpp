#pragma once

#include <vector>

namespace nuframe {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// M-point Gauss-Legendre rule mapped to [a, b].
QuadratureRule gauss_legendre(int M, double a, double b);

}  // namespace nuframe
