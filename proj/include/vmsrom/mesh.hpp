#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace vmsrom {

enum class BoundaryTag { Inlet, Wall, Outlet };

const char* to_string(BoundaryTag tag);
BoundaryTag boundary_tag_from_string(const std::string& name, long line = -1);

struct BoundaryEdge {
  int v0 = -1;
  int v1 = -1;
  BoundaryTag tag = BoundaryTag::Wall;
};

// Affine map x = B*xi + b from the reference triangle {(0,0),(1,0),(0,1)}
// to a physical cell, with the derived quantities every assembly loop needs.
struct AffineMap {
  Eigen::Matrix2d jacobian;          // B
  Eigen::Matrix2d inverse_jacobian;  // B^{-1}
  Eigen::Vector2d origin;            // b (coordinates of vertex 0)
  double det = 0.0;                  // det B = 2*area, positive for ccw cells
};

// Element-level stabilization geometry derived from the inverse map:
// G = B^{-T} B^{-1} and g with g_i = sum_j (B^{-1})_{ji}.
struct CellMetric {
  Eigen::Matrix2d g_matrix;
  Eigen::Vector2d g_vector;
  double g_colon_g = 0.0;  // G:G (Frobenius inner product with itself)
  double g_dot_g = 0.0;    // g.g
};

CellMetric cell_metric(const AffineMap& map);

// Straight-edge triangle mesh with tagged boundary edges. Vertices, cells and
// boundary edges use 0-based contiguous ids; cells are counterclockwise.
class Mesh {
 public:
  Mesh(std::vector<Eigen::Vector2d> vertices, std::vector<std::array<int, 3>> cells,
       std::vector<BoundaryEdge> boundary);

  int n_vertices() const { return static_cast<int>(vertices_.size()); }
  int n_cells() const { return static_cast<int>(cells_.size()); }
  int n_boundary_edges() const { return static_cast<int>(boundary_.size()); }

  const Eigen::Vector2d& vertex(int v) const { return vertices_[v]; }
  const std::array<int, 3>& cell(int c) const { return cells_[c]; }
  const BoundaryEdge& boundary_edge(int e) const { return boundary_[e]; }
  const std::vector<BoundaryEdge>& boundary() const { return boundary_; }

  const AffineMap& map(int c) const { return maps_[c]; }
  double cell_area(int c) const { return 0.5 * maps_[c].det; }
  double total_area() const { return total_area_; }

  // Largest x/y extent of the bounding box; used to scale geometric
  // tolerances (boundary dof identification, inlet straightness).
  double diameter() const { return diameter_; }

  // FNV-1a 64 over the canonical little-endian encoding of vertices, cells
  // and tagged boundary edges. Stable across platforms; used to pair
  // snapshot/basis artifacts with the mesh they came from.
  std::uint64_t checksum() const { return checksum_; }

  void save(std::ostream& out) const;
  void save(const std::string& path) const;

 private:
  std::vector<Eigen::Vector2d> vertices_;
  std::vector<std::array<int, 3>> cells_;
  std::vector<BoundaryEdge> boundary_;
  std::vector<AffineMap> maps_;
  double total_area_ = 0.0;
  double diameter_ = 0.0;
  std::uint64_t checksum_ = 0;

  void validate();
};

CellMetric cell_metric(const Mesh& mesh, int cell_index);

// Structured crossed-triangle mesh of [0,Lx]x[0,Ly] with nx*ny quads, each
// split along a diagonal whose direction alternates with (i+j) parity.
// Boundary tags: x=0 inlet, x=Lx outlet, y=0 and y=Ly wall.
Mesh build_rectangle_mesh(double lx, double ly, int nx, int ny);

Mesh load_mesh(std::istream& in);
Mesh load_mesh(const std::string& path);

}  // namespace vmsrom
