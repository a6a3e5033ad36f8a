#pragma once

/// @file kinetics.hpp
/// @brief Kinetic interface flux. States and slopes on both sides of a face
///        Gauss point feed a relaxation-type distribution whose time integral
///        over the step gives second-order-in-time fluxes; two integration
///        horizons then yield the flux value and its time derivative for the
///        two-stage integrator. All algebra runs in an orthonormal face frame;
///        on moving meshes inputs are boosted by the local grid velocity and
///        outputs are transformed back.

#include <array>

#include "hgks/types.hpp"

namespace hgks {

/// Kinetic primitive state; lam = rho/(2 p).
struct Prim {
  double rho, U, V, W, lam;
};

Prim kinetic_prim(const State5& q, double gamma);

/// Velocity moments of a Maxwellian: full and half-range moments of the normal
/// component, full moments of the transverse components, internal moments.
struct MomentTable {
  std::array<double, 7> u, up, um;  // <u^n>, <u^n>_{u>0}, <u^n>_{u<0}, n = 0..6
  std::array<double, 7> v, w;
  double xi2 = 0.0, xi4 = 0.0;
};

MomentTable moment_table(const Prim& p, double K);

/// Expansion coefficients over psi = (1, u, v, w, (u^2+v^2+w^2+xi^2)/2).
using Coef5 = std::array<double, 5>;

/// Solve <a psi psi> g = dq for the expansion of a slope dq (closed form).
Coef5 micro_slopes(const Prim& p, const State5& dq, double K);

/// One side of a face Gauss point in the local frame (boosted if moving).
struct SideState {
  State5 q;
  State5 dn, dt1, dt2;  // directional derivatives of the conserved variables
};

struct FluxConfig {
  double gamma = 1.4;
  double K = 2.0;
  double c1 = 0.01, c2 = 1.0;  // collision-time constants
  bool viscous = false;
  double mu0 = 0.0;     // dynamic viscosity (reference value for the power law)
  double t_ref = 1.0;   // reference temperature of the power law
  double mu_pow = 0.0;  // 0 -> constant viscosity
  bool prandtl_fix = false;
  double prandtl = 1.0;
};

/// Time-integrated local fluxes over [0, dt/2] and [0, dt].
struct KineticResult {
  State5 Fu[2];  // normal flux column (factor u)
  State5 Fv[2], Fw[2];  // transverse columns, filled in tensor mode
  State5 Qf[2];         // plain psi moments of f, filled when needed
  double tau = 0.0, p0 = 0.0;
};

/// tensor_mode adds the transverse flux columns and distribution moments
/// (moving-mesh path). The Prandtl correction, when enabled, is applied to the
/// energy component of Fu.
KineticResult gauss_point_flux(const SideState& L, const SideState& R, double dt,
                               const FluxConfig& cfg, bool tensor_mode);

/// Orthonormal face frame (nx is the normal).
struct Frame {
  Vec3 nx, ny, nz;
};

State5 rotate_to_frame(const State5& q, const Frame& f);
State5 rotate_from_frame(const State5& q, const Frame& f);

/// Galilean boost of a local-frame state by grid velocity components.
State5 boost_state(const State5& q, const Vec3& ug);
/// Map fluxes of boosted-frame quantities back to inertial quantities.
State5 boost_back_flux(const State5& f, const Vec3& ug);

/// Assemble a side state from a value and global-frame gradients.
SideState make_side_state(const State5& q, const State5& gx, const State5& gy, const State5& gz,
                          const Frame& fr, const Vec3& ug_global);

/// Flux value and time derivative from integrals over the two horizons.
inline void linearize_flux(const State5& half, const State5& full, double dt, State5& f0,
                           State5& fdot) {
  const double a = 1.0 / dt, b = 4.0 / (dt * dt);
  for (int i = 0; i < 5; ++i) {
    f0[i] = a * (4.0 * half[i] - full[i]);
    fdot[i] = b * (full[i] - 2.0 * half[i]);
  }
}

}  // namespace hgks
