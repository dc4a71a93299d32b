//! \file scheme2d.hpp
//! \brief Dimension-split 2D finite-volume scheme with the fourth-order
//!        transverse corrections (face averages <-> face point values), for
//!        uniform and tensor-product non-uniform grids.

#ifndef FV3_SCHEME2D_HPP_
#define FV3_SCHEME2D_HPP_

#include <functional>
#include <vector>

#include "fv3/field.hpp"
#include "fv3/kernels.hpp"
#include "fv3/physics.hpp"

namespace fv3 {

//! Configuration of the 2D spatial scheme. The switch parameters are
//! per-direction because tau depends on the mean mesh width of each axis.
struct Scheme2DConfig {
  Limiter kind = Limiter::kH3LC;
  SwitchParams swx;
  SwitchParams swy;
  Real weno_eps = 1e-6;
  bool order_fix = true;       // steps 2 and 4 (1/24 corrections)
  bool positivity = true;      // guard reconstructed Euler states

  LimiterConfig x_cfg() const { return LimiterConfig{kind, swx, weno_eps}; }
  LimiterConfig y_cfg() const { return LimiterConfig{kind, swy, weno_eps}; }
};

//! Scratch arrays for one RHS evaluation; reusable across stages and steps.
//! Index conventions (interior cells (i,j) in [0,nx) x [0,ny)):
//!   x-face arrays:   face index f in [0, nx], stored at row f;
//!   face averages:   transverse row j in [-2, ny+1], stored at col j+2;
//!   face points:     transverse row j in [-1, ny], stored at col j+1;
//!   averaged fluxes: interior rows only.
//! y-face arrays mirror these with the roles of i and j swapped.
struct Workspace2D {
  std::vector<Array2> xm_avg, xp_avg;  // (nx+1) x (ny+4) per component
  std::vector<Array2> ym_avg, yp_avg;  // (nx+4) x (ny+1)
  std::vector<Array2> xm_pt, xp_pt;    // (nx+1) x (ny+2)
  std::vector<Array2> ym_pt, yp_pt;    // (nx+2) x (ny+1)
  std::vector<Array2> fx_pt, fy_pt;    // like the point arrays
  std::vector<Array2> fxc, fyc;        // (nx+1) x ny and nx x (ny+1)

  void resize(int nx, int ny, int ncomp);
};

//! Step 1: limited 1D reconstructions row-by-row (x) and column-by-column
//! (y), producing face averages in ws. Requires fresh ghosts.
void reconstruct_faces_2d(const CellField2D& f, const Scheme2DConfig& cfg,
                          Workspace2D& ws, LimiterStats* stats = nullptr);

//! Step 2 (and its inverse for step 4) as standalone kernels: the 1/24
//! transverse second-difference correction. Exposed for direct testing.
inline Real transverse_to_point(Real center, Real lo, Real hi) {
  return center - (lo - 2.0 * center + hi) / 24.0;
}
inline Real transverse_to_average(Real center, Real lo, Real hi) {
  return center + (lo - 2.0 * center + hi) / 24.0;
}

//! Full semi-discrete RHS (steps 1-5). dudt holds ncomp interior arrays
//! (nx x ny). If boundary_net is given, it receives the instantaneous net
//! outward flux integral over the domain boundary per component (used for
//! conservation ledgers). Requires fresh ghosts at the evaluation time.
void rhs_2d(const CellField2D& f, const Scheme2DConfig& cfg,
            const PhysicsModel& phys, Workspace2D& ws,
            std::vector<Array2>& dudt, LimiterStats* stats = nullptr,
            Vec4* boundary_net = nullptr);

//! Called after every completed time step.
using StepHook2D = std::function<void(int step, Real t, const CellField2D&)>;

//! Accumulates dt-weighted boundary flux integrals across an advance, so
//! that mass change plus net outflow can be checked to round-off.
struct MassLedger {
  Vec4 outflow = Vec4::Zero();
};

struct Advance2DResult {
  int steps = 0;
  Real t = 0.0;
};

//! SSP-RK3 advance to t_end with per-stage ghost fills at the stage times
//! and the final step clamped to land on t_end exactly.
Advance2DResult advance_2d(CellField2D& f, const Scheme2DConfig& cfg,
                           const PhysicsModel& phys, Real cfl, Real t_end,
                           LimiterStats* stats = nullptr,
                           MassLedger* ledger = nullptr,
                           const StepHook2D& hook = nullptr);

}  // namespace fv3

#endif  // FV3_SCHEME2D_HPP_
