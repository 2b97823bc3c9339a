#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace vmsrom {

using Vec = Eigen::VectorXd;

// One time level of the full-order model: interleaved P2 velocity
// coefficients (dof 2n, 2n+1 for scalar node n) and P1 pressure coefficients.
struct FomState {
  Vec u;
  Vec p;
  double t = 0.0;
};

struct SnapshotMeta {
  double nu = 0.0;
  double dt = 0.0;       // solver time step (not the sampling interval)
  int stride = 1;        // snapshots were taken every `stride` steps
  double c_inv = 36.0;   // inverse-inequality constant used by the solver
  std::uint64_t mesh_checksum = 0;
};

struct SnapshotSet {
  SnapshotMeta meta;
  std::vector<FomState> states;

  int size() const { return static_cast<int>(states.size()); }
};

// Sampled reduced-model trajectory. Column j of u_coeffs/p_coeffs holds the
// coefficients at times[j]; the first velocity coefficient is the pinned
// lifting coefficient (exactly 1 for every sample of a genuine reduced run).
struct RomTrajectory {
  std::vector<double> times;
  Eigen::MatrixXd u_coeffs;
  Eigen::MatrixXd p_coeffs;
  double dt = 0.0;
  std::uint64_t mesh_checksum = 0;

  int size() const { return static_cast<int>(times.size()); }
};

}  // namespace vmsrom
