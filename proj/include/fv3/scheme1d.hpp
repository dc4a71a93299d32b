//! \file scheme1d.hpp
//! \brief 1D finite-volume semi-discretization: limited reconstruction of
//!        interface values and the conservative flux-difference RHS.

#ifndef FV3_SCHEME1D_HPP_
#define FV3_SCHEME1D_HPP_

#include "fv3/field.hpp"
#include "fv3/kernels.hpp"
#include "fv3/physics.hpp"

namespace fv3 {

//! Reconstructed states at the n+1 interfaces: minus[f] is the value just
//! left of interface f (from cell f-1), plus[f] just right (from cell f).
struct Faces1D {
  Array2 minus;
  Array2 plus;

  void resize(int nfaces, int ncomp) {
    minus.resize(nfaces, ncomp);
    plus.resize(nfaces, ncomp);
  }
};

//! Fills faces from the (ghost-filled) field. On non-uniform grids the
//! slopes are scaled per interface and the kernel value is rescaled by
//! dx_i / mean3(dx) so the smooth branch rebuilds the exact three-cell
//! parabola; on uniform grids that factor is exactly one and the raw
//! kernels are used directly.
void reconstruct_1d(const CellField1D& f, const LimiterConfig& cfg,
                    Faces1D& faces, LimiterStats* stats = nullptr);

//! Semi-discrete RHS dudt_i = -(flux_{i+1/2} - flux_{i-1/2}) / dx_i for the
//! interior cells. dudt has interior extent (n x ncomp). Requires fresh
//! ghosts.
void rhs_1d(const CellField1D& f, const LimiterConfig& cfg,
            const PhysicsModel& phys, Array2& dudt,
            LimiterStats* stats = nullptr);

}  // namespace fv3

#endif  // FV3_SCHEME1D_HPP_
