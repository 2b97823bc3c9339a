#pragma once

#include <Eigen/Dense>
#include <vector>

namespace vmsrom {

// Quadrature rule on the reference triangle {(0,0),(1,0),(0,1)}.
// Weights include the reference area, i.e. they sum to 1/2.
struct QuadratureRule {
  std::vector<Eigen::Vector2d> points;
  std::vector<double> weights;
  int degree = 0;  // highest total polynomial degree integrated exactly

  int size() const { return static_cast<int>(points.size()); }
};

// Symmetric 12-point rule, exact for total degree 6. Covers every product
// appearing in the Galerkin and stabilization integrals of P2/P1 spaces.
const QuadratureRule& triangle_quadrature_degree6();

}  // namespace vmsrom
