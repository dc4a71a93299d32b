//! \file timeint.hpp
//! \brief Strong-stability-preserving third-order Runge-Kutta stepping and
//!        CFL-based step-size control.

#ifndef FV3_TIMEINT_HPP_
#define FV3_TIMEINT_HPP_

#include <functional>

#include "fv3/field.hpp"
#include "fv3/kernels.hpp"
#include "fv3/physics.hpp"
#include "fv3/scheme1d.hpp"

namespace fv3 {

//! One SSP-RK3 step of du/dt = rhs(u, t) for any state type supporting
//! scalar multiplication and addition (scalars, Eigen arrays). Stage times
//! are t, t+dt, t+dt/2.
template <typename State, typename Rhs>
State ssp_rk3_step(const State& u, Real t, Real dt, Rhs&& rhs) {
  const State u1 = u + dt * rhs(u, t);
  const State u2 = 0.75 * u + 0.25 * (u1 + dt * rhs(u1, t + dt));
  return (1.0 / 3.0) * u + (2.0 / 3.0) * (u2 + dt * rhs(u2, t + 0.5 * dt));
}

//! CFL step for a 1D field: dt = cfl * min_i dx_i / s_max with s_max the
//! largest signal speed over the interior. Throws std::domain_error when
//! s_max == 0 (the CFL condition then puts no bound on dt; the caller must
//! cap the step itself).
Real compute_dt_1d(const CellField1D& f, const PhysicsModel& phys, Real cfl);

//! CFL step for a 2D field using the summed-directions form
//! dt = cfl / (sx/min dx + sy/min dy).
Real compute_dt_2d(const CellField2D& f, const PhysicsModel& phys, Real cfl);

struct AdvanceResult {
  int steps = 0;
  Real t = 0.0;
};

//! Advances the field to t_end with SSP-RK3; the final step is clamped so
//! the loop lands on t_end exactly. A failing RHS aborts the whole advance
//! with the field restored to the state before the failing step.
AdvanceResult advance_1d(CellField1D& f, const LimiterConfig& cfg,
                         const PhysicsModel& phys, Real cfl, Real t_end,
                         LimiterStats* stats = nullptr);

}  // namespace fv3

#endif  // FV3_TIMEINT_HPP_
