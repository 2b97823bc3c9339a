#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "vmsrom/state.hpp"

namespace vmsrom {

// Reduced velocity/pressure basis. Velocity columns are ordered
// (lifting | n_modes velocity modes | n_modes supremizer modes); the
// supremizer block is absent when with_supremizers is false. The lifting
// column carries the Dirichlet data and keeps a fixed unit coefficient in the
// reduced model; all other velocity columns vanish on the Dirichlet boundary.
struct ReducedBasis {
  Eigen::MatrixXd z_u;  // M_h x (2*n_modes+1), or M_h x (n_modes+1)
  Eigen::MatrixXd z_p;  // K_h x n_modes
  Vec lambda_u;         // correlation eigenvalues, descending (full spectra)
  Vec lambda_s;         // empty when with_supremizers is false
  Vec lambda_p;
  int n_modes = 0;
  bool with_supremizers = true;
  std::uint64_t mesh_checksum = 0;

  int n_velocity_columns() const { return static_cast<int>(z_u.cols()); }
  auto lifting() const { return z_u.col(0); }
  auto velocity_mode(int i) const { return z_u.col(1 + i); }
  auto supremizer_mode(int i) const { return z_u.col(1 + n_modes + i); }
};

}  // namespace vmsrom
