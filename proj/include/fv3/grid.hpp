//! \file grid.hpp
//! \brief 1D/2D cell-boundary meshes: uniform, smoothly perturbed, random,
//!        and tensor-product non-uniform builders.

#ifndef FV3_GRID_HPP_
#define FV3_GRID_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>

#include "fv3/types.hpp"

namespace fv3 {

//! One spatial axis of cells: n cells delimited by n+1 strictly increasing
//! boundaries. Centers are midpoints of their cells.
struct Grid1D {
  Array boundaries;  // size n+1
  Array widths;      // size n, widths[i] = boundaries[i+1] - boundaries[i]
  Array centers;     // size n, midpoints
  Real xl = 0.0;
  Real xr = 1.0;
  // Set by the builders: true only when every cell width is bit-identical,
  // which selects the cheaper equidistant reconstruction path.
  bool uniform = false;

  int n() const { return static_cast<int>(widths.size()); }
  Real min_width() const { return widths.minCoeff(); }
  //! Mean cell width (x_R - x_L)/n; exact by telescoping of the boundaries.
  Real mean_width() const { return (xr - xl) / static_cast<Real>(n()); }
};

//! Tensor-product 2D mesh.
struct Grid2D {
  Grid1D x;
  Grid1D y;

  int nx() const { return x.n(); }
  int ny() const { return y.n(); }
  Real cell_area(int i, int j) const { return x.widths[i] * y.widths[j]; }
};

//! Equidistant grid on [xl, xr]. All stored widths are bit-identical.
Grid1D build_uniform_1d(Real xl, Real xr, int n);

//! Smoothly perturbed grid: interior boundaries of the equidistant grid are
//! shifted by x -> x + c1*sin(c2*2*pi*x); endpoints stay fixed.
Grid1D build_perturbed_1d(Real xl, Real xr, int n, Real c1, Real c2);

//! Randomly jittered grid: each interior boundary of the equidistant grid is
//! shifted by an independent uniform offset in (-amplitude*h, amplitude*h)
//! with h the equidistant spacing. amplitude must lie in [0, 0.5) so that
//! boundaries stay strictly increasing. Deterministic in `seed`.
Grid1D build_random_1d(Real xl, Real xr, int n, Real amplitude,
                       std::uint64_t seed);

//! Builds an axis from explicit boundaries (must be strictly increasing).
Grid1D build_from_boundaries(const Array& boundaries);

Grid2D build_uniform_2d(Real xl, Real xr, Real yl, Real yr, int nx, int ny);

//! Tensor-product non-uniform grid: each axis' interior boundaries are mapped
//! by x -> x + delta*sin(c*pi*x) (endpoints fixed).
Grid2D build_nonuniform_2d(Real xl, Real xr, Real yl, Real yr, int nx, int ny,
                           Real delta_x, Real cx, Real delta_y, Real cy);

//! Writes one boundary per line.
void write_grid_csv(const Grid1D& g, std::ostream& os);

}  // namespace fv3

#endif  // FV3_GRID_HPP_
