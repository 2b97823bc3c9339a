#pragma once

#include <memory>
#include <vector>

#include "vmsrom/basis.hpp"
#include "vmsrom/fe_space.hpp"
#include "vmsrom/operators.hpp"
#include "vmsrom/state.hpp"

namespace vmsrom {

enum class CorrelationKind {
  VelocityFluctuation,  // mean subtracted, H1-seminorm Gramian
  Pressure,             // L2 Gramian
  Supremizer,           // H1-seminorm Gramian, no mean subtraction
};

struct CorrelationMatrix {
  Eigen::MatrixXd entries;  // (n_snapshots x n_snapshots) inner products
  CorrelationKind kind = CorrelationKind::Pressure;
};

// Entry (i,j) = Gramian-weighted inner product of snapshots i and j; the
// velocity kind works on fluctuations (snapshot minus the snapshot mean).
CorrelationMatrix correlation(const std::vector<Vec>& snapshots, CorrelationKind kind,
                              const SpMat& gramian);

struct PodResult {
  Eigen::MatrixXd modes;  // first n_modes, Gramian-orthonormal, sign-fixed
  Vec eigenvalues;        // full spectrum, descending
  int rank = 0;           // eigenvalues above tol * lambda_1
};

// Modes as snapshot combinations phi_n = sum_i (v_n)_i s_i / sqrt(lambda_n),
// built from the same (fluctuation) vectors the correlation used. Requesting
// more modes than the numerical rank raises RankError carrying the rank.
PodResult pod_modes(const CorrelationMatrix& corr, const std::vector<Vec>& snapshots,
                    const SpMat& gramian, int n_modes, double tol = 1e-12);

// Vector Poisson solves (grad s, grad v) = (grad p, v) with homogeneous
// Dirichlet data on inlet and wall dofs; the factorization is reused across
// pressure snapshots.
class SupremizerSolver {
 public:
  SupremizerSolver(const FeSystem& fes, const OperatorSet& ops);
  SupremizerSolver(SupremizerSolver&&) noexcept;
  ~SupremizerSolver();

  Vec solve(const Vec& pressure) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Full pipeline: lifting = time-averaged velocity; velocity POD on the
// fluctuations; pressure POD; optionally one supremizer solve per pressure
// snapshot followed by POD compression of the supremizer family. Column
// order of z_u: (lifting | velocity modes | supremizer modes).
ReducedBasis build_basis(const FeSystem& fes, const OperatorSet& ops, const SnapshotSet& snaps,
                         int n_modes, bool with_supremizers);

}  // namespace vmsrom
