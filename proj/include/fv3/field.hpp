//! \file field.hpp
//! \brief Cell-centered fields with a two-cell ghost frame, 1D and 2D.

#ifndef FV3_FIELD_HPP_
#define FV3_FIELD_HPP_

#include <array>
#include <functional>
#include <vector>

#include "fv3/grid.hpp"
#include "fv3/physics.hpp"
#include "fv3/types.hpp"

namespace fv3 {

enum class Bc1D { kPeriodic, kOutflow };

//! 1D field of cell averages, ncomp components, two ghost cells per side.
//! Interior cells are indexed 0..n-1; ghosts -2..-1 and n..n+1.
struct CellField1D {
  Grid1D grid;
  Array2 u;     // (n + 2*kGhost) x ncomp
  Array wext;   // extended widths, n + 2*kGhost
  Bc1D bc = Bc1D::kPeriodic;
  int ncomp = 1;

  static CellField1D make(Grid1D g, int ncomp, Bc1D bc);

  int n() const { return grid.n(); }
  Real& at(int i, int k) { return u(i + kGhost, k); }
  Real at(int i, int k) const { return u(i + kGhost, k); }
  Real width(int i) const { return wext[i + kGhost]; }

  //! Refreshes ghost values (and ghost widths) from the boundary condition.
  void fill_ghosts();
};

//! Boundary prescription for one side of a 2D field.
//!
//! kCustom receives the cell-center coordinates of the ghost cell, the time,
//! and the mirrored interior state (interior cell reflected across the wall,
//! with untouched sign), and returns the ghost state. This is general enough
//! for inflow, time-dependent exact states, and partial walls.
struct Boundary2D {
  enum class Kind { kPeriodic, kOutflow, kReflect, kCustom } kind = Kind::kPeriodic;
  std::function<Vec4(Real x, Real y, Real t, const Vec4& mirror)> custom;
};

enum class Face2D { kXlo = 0, kXhi = 1, kYlo = 2, kYhi = 3 };

//! 2D field of cell averages on a tensor-product grid. Storage is one
//! Array2 per component, (nx+4) x (ny+4), column-major so x-sweeps are
//! contiguous. Interior (i,j) in [0,nx) x [0,ny).
struct CellField2D {
  Grid2D grid;
  std::vector<Array2> q;
  Array wx;  // extended x-widths, nx + 2*kGhost
  Array wy;  // extended y-widths, ny + 2*kGhost
  Array cx;  // extended x cell centers
  Array cy;  // extended y cell centers
  std::array<Boundary2D, 4> bc;
  int ncomp = 1;

  static CellField2D make(Grid2D g, int ncomp,
                          const std::array<Boundary2D, 4>& bc);

  int nx() const { return grid.nx(); }
  int ny() const { return grid.ny(); }
  Real& at(int k, int i, int j) { return q[k](i + kGhost, j + kGhost); }
  Real at(int k, int i, int j) const { return q[k](i + kGhost, j + kGhost); }
  Real dx(int i) const { return wx[i + kGhost]; }
  Real dy(int j) const { return wy[j + kGhost]; }

  Vec4 state(int i, int j) const {
    Vec4 s;
    for (int k = 0; k < 4; ++k) s[k] = q[k](i + kGhost, j + kGhost);
    return s;
  }
  void set_state(int i, int j, const Vec4& s) {
    for (int k = 0; k < 4; ++k) q[k](i + kGhost, j + kGhost) = s[k];
  }

  //! Refreshes the full two-deep ghost frame, including corners, for time t.
  void fill_ghosts(Real t);
};

}  // namespace fv3

#endif  // FV3_FIELD_HPP_
