#pragma once

#include <functional>
#include <iosfwd>
#include <memory>
#include <string>

#include "vmsrom/operators.hpp"
#include "vmsrom/state.hpp"

namespace vmsrom {

struct SolverConfig {
  double dt = 0.002;
  double t_end = 2.0;
  double newton_abs_tol = 1e-8;  // absolute residual 2-norm target
  double newton_rel_tol = 1e-6;  // relative to the step's initial residual
  int newton_max_iter = 25;
  int max_line_search = 8;  // residual-halving damping attempts per iteration
  int stride = 1;           // record every stride-th step
  bool vms_enabled = true;
  double c_inv = 36.0;
  int ramp_steps = 10;        // Dirichlet lift ramped linearly over this many steps
  int pressure_pin_dof = -1;  // >= 0 pins that pressure dof to zero (enclosed domains)
  // "step": factor the Newton matrix once per time step and reuse it within
  // the step (rebuilt automatically if the line search stalls);
  // "iteration": fresh matrix every iteration.
  std::string jacobian_rebuild = "step";
};

// Dirichlet boundary values at a given step: fill `values` at the constrained
// velocity dofs (other entries are ignored). Default: ramp factor times the
// static inlet lift, zero on walls.
using DirichletValues = std::function<void(int step_index, double t, Vec& values)>;

// Static inlet data: u_x = 4*peak*y'(1-y') across a straight vertical inlet,
// u_y = 0, zero on walls. Returns a full-length velocity vector that is zero
// away from inlet nodes.
Vec parabolic_inlet(const FeSystem& fes, double peak_velocity);

struct StepStats {
  int newton_iters = 0;
  double residual = 0.0;
  int factorizations = 0;
};

// Backward-Euler time stepping of the stabilized system with a damped Newton
// solve per step. Immutable inputs are shared by reference; the solver owns
// only scratch state (factorization cache, step statistics).
class FomSolver {
 public:
  FomSolver(const FeSystem& fes, const OperatorSet& ops, SolverConfig config);
  FomSolver(FomSolver&&) noexcept;
  ~FomSolver();

  const SolverConfig& config() const { return config_; }

  void set_inlet_lift(Vec lift);              // full-length, zero off the inlet
  void set_dirichlet_values(DirichletValues values);  // replaces the ramped lift
  void set_forcing(TimeForce f);

  // Zero velocity/pressure with Dirichlet values of step 0 applied.
  FomState initial_state() const;

  // One step from `prev` (at t=(step_index-1)*dt) to t=step_index*dt.
  FomState advance(const FomState& prev, int step_index);
  const StepStats& last_stats() const { return stats_; }

  // Time loop from initial_state() over round(t_end/dt) steps; records every
  // stride-th state. Log lines: `t=<..> newton_iters=<..> res=<..>`.
  SnapshotSet run(std::ostream* log = nullptr);
  // Continue from an arbitrary state at absolute step index `start_step`
  // (t = start_step*dt); times are always derived from the integer index so
  // a restarted run reproduces the original trajectory bit-for-bit.
  SnapshotSet continue_run(const FomState& start, int start_step, int n_steps,
                           std::ostream* log = nullptr);

  // Discrete residual of the fully implicit system at iterate (u,p) given the
  // previous time level, with Dirichlet rows replaced by u_i - g_i. tau is
  // recomputed from `iterate.u` unless `frozen_tau` is supplied (the Newton
  // matrix below always freezes tau). Exposed for the finite-difference
  // Jacobian oracle and the ROM consistency tests.
  Vec residual(const FomState& iterate, const FomState& prev, int step_index,
               const StabCoefficients* frozen_tau = nullptr) const;
  SpMat newton_matrix(const FomState& iterate, const FomState& prev, int step_index,
                      const StabCoefficients* frozen_tau = nullptr) const;

  int n_steps() const;

 private:
  struct Impl;
  const FeSystem& fes_;
  const OperatorSet& ops_;
  SolverConfig config_;
  Vec inlet_lift_;
  DirichletValues dirichlet_;
  TimeForce forcing_;
  StepStats stats_;
  std::unique_ptr<Impl> impl_;

  void fill_dirichlet(int step_index, Vec& u) const;
  Vec step_load(double t) const;
};

}  // namespace vmsrom
