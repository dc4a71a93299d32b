//! \file physics.hpp
//! \brief Flux functions and state handling for linear advection and the 2D
//!        compressible Euler equations (ideal gas).

#ifndef FV3_PHYSICS_HPP_
#define FV3_PHYSICS_HPP_

#include <cmath>
#include <sstream>

#include "fv3/types.hpp"

namespace fv3 {

// Component indices of the conserved Euler state.
inline constexpr int kRho = 0;  // density
inline constexpr int kMx = 1;   // x-momentum
inline constexpr int kMy = 2;   // y-momentum
inline constexpr int kEn = 3;   // total energy

struct Prim {
  Real rho;
  Real u;
  Real v;
  Real p;
};

inline Vec4 cons_from_prim(const Prim& w, Real gamma) {
  Vec4 q;
  q[kRho] = w.rho;
  q[kMx] = w.rho * w.u;
  q[kMy] = w.rho * w.v;
  q[kEn] = w.p / (gamma - 1.0) + 0.5 * w.rho * (w.u * w.u + w.v * w.v);
  return q;
}

inline Real pressure(const Vec4& q, Real gamma) {
  return (gamma - 1.0) *
         (q[kEn] - 0.5 * (q[kMx] * q[kMx] + q[kMy] * q[kMy]) / q[kRho]);
}

inline Prim prim_from_cons(const Vec4& q, Real gamma) {
  Prim w;
  w.rho = q[kRho];
  w.u = q[kMx] / q[kRho];
  w.v = q[kMy] / q[kRho];
  w.p = pressure(q, gamma);
  return w;
}

//! Density and pressure strictly positive and everything finite.
inline bool physically_valid(const Vec4& q, Real gamma) {
  if (!(q[kRho] > 0.0) || !q.isFinite().all()) return false;
  return pressure(q, gamma) > 0.0;
}

inline void throw_invalid_state(const Vec4& q, Real gamma, const char* where) {
  std::ostringstream msg;
  msg << "invalid gas state in " << where << ": rho=" << q[kRho]
      << " mx=" << q[kMx] << " my=" << q[kMy] << " E=" << q[kEn]
      << " p=" << pressure(q, gamma);
  throw PhysicsError(msg.str());
}

inline Real sound_speed(const Vec4& q, Real gamma) {
  return std::sqrt(gamma * pressure(q, gamma) / q[kRho]);
}

inline Vec4 euler_flux_x(const Vec4& q, Real gamma) {
  const Real u = q[kMx] / q[kRho];
  const Real p = pressure(q, gamma);
  Vec4 f;
  f[kRho] = q[kMx];
  f[kMx] = q[kMx] * u + p;
  f[kMy] = q[kMy] * u;
  f[kEn] = (q[kEn] + p) * u;
  return f;
}

inline Vec4 euler_flux_y(const Vec4& q, Real gamma) {
  const Real v = q[kMy] / q[kRho];
  const Real p = pressure(q, gamma);
  Vec4 g;
  g[kRho] = q[kMy];
  g[kMx] = q[kMx] * v;
  g[kMy] = q[kMy] * v + p;
  g[kEn] = (q[kEn] + p) * v;
  return g;
}

//! Local Lax-Friedrichs (Rusanov) flux in x. Mirrors rusanov_y exactly under
//! the swap (x<->y, mx<->my) so that transposed fields evolve bit-identically.
inline Vec4 rusanov_x(const Vec4& ql, const Vec4& qr, Real gamma) {
  if (!physically_valid(ql, gamma)) throw_invalid_state(ql, gamma, "rusanov_x(left)");
  if (!physically_valid(qr, gamma)) throw_invalid_state(qr, gamma, "rusanov_x(right)");
  const Real sl = std::abs(ql[kMx] / ql[kRho]) + sound_speed(ql, gamma);
  const Real sr = std::abs(qr[kMx] / qr[kRho]) + sound_speed(qr, gamma);
  const Real s = std::max(sl, sr);
  return 0.5 * (euler_flux_x(ql, gamma) + euler_flux_x(qr, gamma)) -
         0.5 * s * (qr - ql);
}

inline Vec4 rusanov_y(const Vec4& ql, const Vec4& qr, Real gamma) {
  if (!physically_valid(ql, gamma)) throw_invalid_state(ql, gamma, "rusanov_y(left)");
  if (!physically_valid(qr, gamma)) throw_invalid_state(qr, gamma, "rusanov_y(right)");
  const Real sl = std::abs(ql[kMy] / ql[kRho]) + sound_speed(ql, gamma);
  const Real sr = std::abs(qr[kMy] / qr[kRho]) + sound_speed(qr, gamma);
  const Real s = std::max(sl, sr);
  return 0.5 * (euler_flux_y(ql, gamma) + euler_flux_y(qr, gamma)) -
         0.5 * s * (qr - ql);
}

//! Largest |u|+c over a state, per direction.
inline Real max_signal_x(const Vec4& q, Real gamma) {
  return std::abs(q[kMx] / q[kRho]) + sound_speed(q, gamma);
}
inline Real max_signal_y(const Vec4& q, Real gamma) {
  return std::abs(q[kMy] / q[kRho]) + sound_speed(q, gamma);
}

//! Governing equations selector. Advection evolves a single scalar with
//! constant velocity (ax, ay); Euler evolves the 4-component gas state.
struct PhysicsModel {
  enum class Kind { kAdvection, kEuler } kind = Kind::kAdvection;
  Real ax = 1.0;
  Real ay = 0.0;
  Real gamma = 1.4;

  int ncomp() const { return kind == Kind::kAdvection ? 1 : 4; }

  static PhysicsModel advection(Real ax, Real ay = 0.0) {
    PhysicsModel m;
    m.kind = Kind::kAdvection;
    m.ax = ax;
    m.ay = ay;
    return m;
  }
  static PhysicsModel euler(Real gamma = 1.4) {
    PhysicsModel m;
    m.kind = Kind::kEuler;
    m.gamma = gamma;
    return m;
  }
};

//! Upwind flux for scalar advection with speed a.
inline Real upwind_flux(Real a, Real ul, Real ur) {
  return a >= 0.0 ? a * ul : a * ur;
}

//! Largest blend factor theta in [0,1] such that every state
//! mean + theta*(q_k - mean) has density and pressure >= eps. Density is
//! linear in theta and handled in closed form; pressure by bisection. The
//! mean itself must be a valid state or the cell is beyond repair and a
//! PhysicsError is thrown. Callers apply the blend with the returned theta;
//! because all states are pulled toward the shared mean by one factor, any
//! linear combination of +/- pairs (and hence conservation identities built
//! on them) is preserved.
inline Real positivity_theta(const Vec4& mean, const Vec4* states, int count,
                             Real gamma, Real eps = 1e-10) {
  if (!(mean[kRho] >= eps) || !(pressure(mean, gamma) >= eps) ||
      !mean.isFinite().all()) {
    throw_invalid_state(mean, gamma, "positivity_theta(cell mean)");
  }
  Real theta_rho = 1.0;
  for (int k = 0; k < count; ++k) {
    const Real rho = states[k][kRho];
    if (!(rho >= eps)) {
      // Solve mean_rho + t*(rho - mean_rho) = eps for t; mean_rho >= eps > rho.
      theta_rho = std::min(theta_rho, (mean[kRho] - eps) / (mean[kRho] - rho));
    }
    if (!states[k].isFinite().all()) theta_rho = 0.0;
  }
  // Pressure is concave along the blend, so any t below a state's crossing
  // point keeps that state's pressure >= eps. Each state is bisected
  // independently from the same start and the minimum is taken; this makes
  // the result invariant under permutations of the state list, which the
  // x/y symmetry of the 2D sweeps relies on.
  Real theta = theta_rho;
  for (int k = 0; k < count; ++k) {
    auto p_at = [&](Real t) {
      const Vec4 q = mean + t * (states[k] - mean);
      return pressure(q, gamma);
    };
    if (p_at(theta_rho) >= eps) continue;
    Real lo = 0.0;  // p_at(0) = mean pressure >= eps
    Real hi = theta_rho;
    for (int it = 0; it < 60 && (hi - lo) > 1e-15; ++it) {
      const Real mid = 0.5 * (lo + hi);
      if (p_at(mid) >= eps) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    theta = std::min(theta, lo);
  }
  return theta;
}

}  // namespace fv3

#endif  // FV3_PHYSICS_HPP_
