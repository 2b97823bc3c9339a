#pragma once

#include <Eigen/Dense>
#include <array>
#include <functional>
#include <vector>

#include "vmsrom/mesh.hpp"
#include "vmsrom/quadrature.hpp"

namespace vmsrom {

// Reference-element shape functions on {(0,0),(1,0),(0,1)}.
// P2 node order: vertices 0,1,2 then edge midpoints (0,1),(1,2),(2,0).
// Hessians are packed per node as (d_xx, d_xy, d_yy).
void p2_reference_basis(const Eigen::Vector2d& xi, Eigen::Matrix<double, 6, 1>* values,
                        Eigen::Matrix<double, 6, 2>* gradients,
                        Eigen::Matrix<double, 6, 3>* hessians);
void p1_reference_basis(const Eigen::Vector2d& xi, Eigen::Matrix<double, 3, 1>* values,
                        Eigen::Matrix<double, 3, 2>* gradients);

// Taylor-Hood pair on a triangle mesh: vector-valued P2 velocity, scalar P1
// pressure. Scalar P2 nodes are numbered vertices first, then edges
// (vertex v -> node v, edge e -> n_vertices + e); velocity dofs interleave
// components as dof = 2*node + component. Pressure dofs equal vertex ids.
//
// The constructor precomputes physical-frame basis tables at every
// quadrature point of every cell; assembly loops read them instead of
// re-evaluating shape functions.
class FeSystem {
 public:
  explicit FeSystem(Mesh mesh);

  const Mesh& mesh() const { return mesh_; }
  const QuadratureRule& quadrature() const { return quad_; }

  int n_edges() const { return n_edges_; }
  int n_scalar_nodes() const { return mesh_.n_vertices() + n_edges_; }
  int n_velocity_dofs() const { return 2 * n_scalar_nodes(); }
  int n_pressure_dofs() const { return mesh_.n_vertices(); }

  Eigen::Vector2d node_position(int node) const;
  const std::array<int, 6>& cell_nodes(int c) const { return cell_nodes_[c]; }

  // Scalar node ids on tagged boundary parts (edge endpoints + midpoints),
  // sorted ascending. A node on the inlet/wall junction appears in both.
  const std::vector<int>& inlet_nodes() const { return inlet_nodes_; }
  const std::vector<int>& wall_nodes() const { return wall_nodes_; }
  // Union of both component dofs of all inlet+wall nodes, sorted ascending.
  const std::vector<int>& dirichlet_velocity_dofs() const { return dirichlet_dofs_; }

  // One boundary edge on the outflow part, as seen by the P2 trace: the two
  // endpoint nodes, the midpoint node, the outward unit normal, and the edge
  // length. Only these three scalar nodes have nonzero trace on the edge.
  // Faces follow the mesh file's boundary-edge order.
  struct OutletFace {
    std::array<int, 3> nodes;  // endpoint, endpoint, midpoint
    Eigen::Vector2d normal;
    double length;
  };
  const std::vector<OutletFace>& outlet_faces() const { return outlet_faces_; }

  // Reference-frame values (identical for all cells).
  double p2_value(int q, int i) const { return p2_values_(i, q); }
  double p1_value(int q, int l) const { return p1_values_(l, q); }

  // Physical-frame derivative tables.
  const Eigen::Matrix<double, 6, 2>& p2_gradient(int c, int q) const {
    return p2_gradients_[static_cast<std::size_t>(c) * quad_.size() + q];
  }
  const Eigen::Matrix<double, 6, 3>& p2_hessian(int c) const { return p2_hessians_[c]; }
  const Eigen::Matrix<double, 3, 2>& p1_gradient(int c) const { return p1_gradients_[c]; }

  struct BasisEval {
    Eigen::Matrix<double, 6, 1> p2_values;
    Eigen::Matrix<double, 6, 2> p2_gradients;
    Eigen::Matrix<double, 6, 3> p2_hessians;
    Eigen::Matrix<double, 3, 1> p1_values;
    Eigen::Matrix<double, 3, 2> p1_gradients;
  };
  // Physical-frame evaluation at an arbitrary reference point of a cell.
  BasisEval evaluate_basis(int cell, const Eigen::Vector2d& ref_point) const;

  // Nodal interpolants (exact for polynomials the spaces can represent).
  Eigen::VectorXd interpolate_velocity(
      const std::function<Eigen::Vector2d(const Eigen::Vector2d&)>& f) const;
  Eigen::VectorXd interpolate_pressure(const std::function<double(const Eigen::Vector2d&)>& f) const;

 private:
  Mesh mesh_;
  QuadratureRule quad_;
  int n_edges_ = 0;
  std::vector<std::array<int, 2>> edge_vertices_;
  std::vector<std::array<int, 3>> cell_edges_;
  std::vector<std::array<int, 6>> cell_nodes_;
  std::vector<int> inlet_nodes_, wall_nodes_, dirichlet_dofs_;
  std::vector<OutletFace> outlet_faces_;

  Eigen::Matrix<double, 6, Eigen::Dynamic> p2_values_;  // node x quad point
  Eigen::Matrix<double, 3, Eigen::Dynamic> p1_values_;
  std::vector<Eigen::Matrix<double, 6, 2>> p2_gradients_;  // [cell*nq + q]
  std::vector<Eigen::Matrix<double, 6, 3>> p2_hessians_;   // [cell], constant per cell
  std::vector<Eigen::Matrix<double, 3, 2>> p1_gradients_;  // [cell], constant per cell
};

}  // namespace vmsrom
