#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "vmsrom/basis.hpp"
#include "vmsrom/fom.hpp"
#include "vmsrom/io.hpp"

namespace vmsrom {

// Reduced coefficients. a[0] is the lifting coefficient, pinned to exactly 1
// and never solved for (its row/column are condensed out of the Newton
// system); a[1..] are the mode/supremizer coefficients, b the pressure ones.
struct RomState {
  Vec a;
  Vec b;
  double t = 0.0;
};

struct RomOptions {
  // true: project the full stabilized residual (model matches the full-order
  // equations exactly); false: plain Galerkin projection of the unstabilized
  // operators with precomputed convection tensor and B_rb u = 0 continuity.
  bool consistent = true;
  // The non-consistent variant solves a saddle system whose pressure block is
  // controlled only by the reduced divergence matrix. Construction fails with
  // SingularSystemError when the normalized smallest singular value of that
  // matrix drops below min_inf_sup, unless allow_singular is set. Measured
  // scales: supremizer-enriched bases sit around 1e-2..1e-1, plain velocity
  // modes around 1e-5..1e-4 (shrinking as modes are added), so 1e-3 separates
  // the two populations by more than a decade on each side.
  bool allow_singular = false;
  double min_inf_sup = 1e-3;
  // Time step, Newton tolerances, stride, ramp, and stabilization settings;
  // use the same values as the full-order run the basis was trained on.
  SolverConfig solver;
};

// Galerkin projection of the flow model onto a reduced basis plus the
// backward-Euler/Newton time stepper in reduced coordinates.
class ReducedModel {
 public:
  ReducedModel(const FeSystem& fes, const OperatorSet& ops, ReducedBasis basis,
               RomOptions opts);
  ReducedModel(ReducedModel&&) noexcept;
  ~ReducedModel();

  const ReducedBasis& basis() const { return basis_; }
  const RomOptions& options() const { return opts_; }

  // Dense projected operators over the full column set (lifting included):
  // m_rb/a_rb are cols x cols, b_rb is n_p x cols, f_rb has length cols.
  // a_rb carries unit viscosity (the model applies the 2*nu factor).
  const Eigen::MatrixXd& m_rb() const;
  const Eigen::MatrixXd& a_rb() const;
  const Eigen::MatrixXd& b_rb() const;
  const Vec& f_rb() const;
  // Convection tensor, non-consistent path only: tensor()[k](i,j) is the
  // column-i contraction of C(column k) applied to column j.
  const std::vector<Eigen::MatrixXd>& convection_tensor() const;

  // Smallest singular value of the reduced divergence matrix over the free
  // (non-lifting) columns, normalized by the velocity/pressure Gramians.
  double reduced_inf_sup() const;

  // Boundary data and forcing forwarded to the embedded full-order residual
  // (consistent path) and to the load projection (non-consistent path).
  void set_inlet_lift(Vec lift);
  void set_dirichlet_values(DirichletValues values);
  void set_forcing(TimeForce f);

  Vec lift_velocity(const RomState& s) const;
  Vec lift_pressure(const RomState& s) const;
  RomState initial_state(const Vec& u_full, const Vec& p_full, double t = 0.0) const;

  // One backward-Euler step from `prev` (at t=(step_index-1)*dt) with a
  // damped Newton solve of the reduced system; mirrors the full-order
  // stepper's reuse/line-search policy.
  RomState step(const RomState& prev, int step_index);
  const StepStats& last_stats() const { return stats_; }

  // March n_steps from `start` at absolute step index start_step, recording
  // every stride-th state. Log lines match the full-order run's format.
  RomTrajectory run(const RomState& start, int start_step, int n_steps,
                    std::ostream* log = nullptr);

 private:
  struct Impl;
  const FeSystem& fes_;
  const OperatorSet& ops_;
  ReducedBasis basis_;
  RomOptions opts_;
  StepStats stats_;
  std::unique_ptr<Impl> impl_;
};

// X_u-orthogonal projection of (u0 - lifting) onto the free velocity columns
// and X_p projection of p0 onto the pressure modes, via dense Gram solves.
RomState rom_initial_state(const OperatorSet& ops, const ReducedBasis& basis, const Vec& u0_full,
                           const Vec& p0_full, double t = 0.0);

// Per-sample and time-integrated relative errors of a reduced trajectory
// against reference snapshots on the same time grid: velocity in the H1
// seminorm, pressure in L2, kinetic energy u'Mu and enstrophy u'Wu as scalar
// time series (all L2-in-time for the integrated values).
struct TrajectoryMetrics {
  std::vector<ErrorsVsTimeRow> rows;
  double err_u = 0.0;
  double err_p = 0.0;
  double err_kinetic = 0.0;
  double err_enstrophy = 0.0;
};

TrajectoryMetrics compute_metrics(const FeSystem& fes, const OperatorSet& ops,
                                  const ReducedBasis& basis, const RomTrajectory& rom,
                                  const SnapshotSet& reference, const std::string& variant);

// max over time of |supremizer coefficients| divided by max over time of
// |velocity-mode coefficients|; 0 for a basis without supremizer columns.
double supremizer_dormancy(const RomTrajectory& rom, const ReducedBasis& basis);

}  // namespace vmsrom
