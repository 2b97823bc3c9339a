#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <functional>
#include <utility>
#include <vector>

#include "vmsrom/fe_space.hpp"
#include "vmsrom/state.hpp"

namespace vmsrom {

using SpMat = Eigen::SparseMatrix<double>;
using SpatialForce = std::function<Eigen::Vector2d(const Eigen::Vector2d&)>;
using TimeForce = std::function<Eigen::Vector2d(const Eigen::Vector2d&, double)>;

// Time-independent operators of the semi-discrete system. A is stored
// without the 2*nu factor (applied as 2*nu*A); B maps velocity to pressure
// test space with B_li = -(psi_l, div phi_i).
struct OperatorSet {
  SpMat M;    // velocity mass
  SpMat A;    // symmetric-gradient diffusion, unit viscosity
  SpMat B;    // pressure/divergence coupling (K_h x M_h)
  SpMat X_u;  // velocity H1-seminorm Gramian (grad : grad)
  SpMat X_p;  // pressure L2 Gramian
  Vec F;      // body-force load vector
  double nu = 0.0;
  double dt = 0.0;
};

OperatorSet assemble_static(const FeSystem& fes, double nu, double dt,
                            const SpatialForce& body_force = {});

// Load vector (f(.,t), phi_i) for a time-dependent body force.
Vec assemble_load(const FeSystem& fes, const TimeForce& f, double t);

// Convection matrix C(u): (C(u) v)_i = -(v_h (x) u_h, grad phi_i).
// Linear in the transported coefficients v, reassembled per nonlinear iterate.
SpMat apply_convection(const FeSystem& fes, const Vec& u);

// Derivative of u -> C(u)u is C(u) + K(u); this returns the transport part
// K(u)_ij = -(u_h (x) phi_j, grad phi_i).
SpMat convection_transport_jacobian(const FeSystem& fes, const Vec& u);

// Convection residual -(u_h (x) u_h, grad phi_i) evaluated directly as a
// vector (equals apply_convection(fes,u)*u without building the matrix).
Vec convection_residual(const FeSystem& fes, const Vec& u);

// Pressure-gradient coupling (phi_i, grad psi_l), M_h x K_h. Differs from
// B^T by the boundary term of integration by parts; used for the supremizer
// right-hand side.
SpMat assemble_grad_p(const FeSystem& fes);

// Gramian of the scalar curl, W_ij = (curl phi_j, curl phi_i); enstrophy of
// a coefficient vector u is u^T W u.
SpMat assemble_curl_gramian(const FeSystem& fes);

// Stabilization coefficients at every quadrature point, frozen between
// reassemblies: tau_m = (4/dt^2 + u.Gu + c_inv nu^2 G:G)^(-1/2),
// tau_c = 1/(tau_m g.g).
struct StabCoefficients {
  int nq = 0;
  std::vector<double> tau_m;  // [cell*nq + q]
  std::vector<double> tau_c;
  double c_inv = 36.0;
};

std::pair<double, double> stabilization_coefficients(const CellMetric& metric,
                                                     const Eigen::Vector2d& u_at_qp, double nu,
                                                     double dt, double c_inv);
StabCoefficients stabilization_field(const FeSystem& fes, const Vec& u, double nu, double dt,
                                     double c_inv);

// Strong-form residuals at every quadrature point. The time derivative uses
// the same backward difference as the outer scheme: (u_now - u_prev)/dt.
struct StrongResidual {
  int nq = 0;
  std::vector<Eigen::Vector2d> r_m;  // [cell*nq + q], momentum residual
  std::vector<double> r_c;           // divergence residual
};

StrongResidual strong_residuals(const FeSystem& fes, const Vec& u_now, const Vec& u_prev,
                                const Vec& p_now, double dt, double nu, const TimeForce& f = {},
                                double t = 0.0);

// The four momentum stabilization terms and the continuity term, kept
// separate so tests can check their scaling in tau_m individually. Signs are
// as the terms enter the residual: D = sum of the four, continuity rhs = E.
struct VmsTerms {
  Vec cross_advection;  // (tau_m r_m, (u_h . grad) phi_i)
  Vec cross_transpose;  // (u_h, (tau_m r_m . grad) phi_i)
  Vec reynolds;         // -(tau_m r_m (x) tau_m r_m, grad phi_i)
  Vec grad_div;         // (tau_c r_c, div phi_i)
  Vec continuity;       // (tau_m r_m, grad psi_l), length K_h

  Vec momentum() const { return cross_advection + cross_transpose + reynolds + grad_div; }
};

VmsTerms assemble_vms_terms(const FeSystem& fes, const Vec& u_now, const StabCoefficients& coeffs,
                            const StrongResidual& residuals);

// Convenience wrapper: residuals + terms -> (D, E). Time step and evaluation
// time are taken from the state times.
std::pair<Vec, Vec> assemble_vms(const FeSystem& fes, const FomState& state, const FomState& prev,
                                 const StabCoefficients& coeffs, double nu,
                                 const TimeForce& f = {});

// Stabilization contributions plus their exact derivatives with respect to
// the current iterate (tau held frozen). j_* are the derivatives of (d, e):
// the Newton matrix adds j_uu/j_up to the momentum rows and subtracts
// j_pu/j_pp from the continuity rows (residual there is B u - e).
struct VmsSystem {
  Vec d;  // length M_h
  Vec e;  // length K_h
  SpMat j_uu, j_up;  // d(d)/du, d(d)/dp
  SpMat j_pu, j_pp;  // d(e)/du, d(e)/dp
};

VmsSystem assemble_vms_system(const FeSystem& fes, const Vec& u_now, const Vec& u_prev,
                              const Vec& p_now, const StabCoefficients& coeffs, double nu,
                              double dt, const TimeForce& f = {}, double t = 0.0,
                              bool with_jacobian = true);

}  // namespace vmsrom
