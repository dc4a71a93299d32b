//! \file grid.cpp
//! \brief Mesh builders and serialization.

#include "fv3/grid.hpp"

#include <cmath>
#include <ostream>
#include <random>
#include <sstream>

namespace fv3 {

namespace {

constexpr Real kTwoPi = 6.283185307179586476925286766559;

void finish_from_boundaries(Grid1D& g) {
  const int n = static_cast<int>(g.boundaries.size()) - 1;
  if (n < 1) {
    throw std::invalid_argument("grid needs at least one cell");
  }
  g.widths.resize(n);
  g.centers.resize(n);
  for (int i = 0; i < n; ++i) {
    const Real w = g.boundaries[i + 1] - g.boundaries[i];
    if (!(w > 0.0)) {
      std::ostringstream msg;
      msg << "grid boundaries not strictly increasing at index " << (i + 1)
          << ": x[" << i << "]=" << g.boundaries[i] << ", x[" << (i + 1)
          << "]=" << g.boundaries[i + 1];
      throw std::invalid_argument(msg.str());
    }
    g.widths[i] = w;
    g.centers[i] = 0.5 * (g.boundaries[i] + g.boundaries[i + 1]);
  }
  g.xl = g.boundaries[0];
  g.xr = g.boundaries[n];
  g.uniform = (g.widths == g.widths[0]).all();
}

Array equidistant_boundaries(Real xl, Real xr, int n) {
  if (n < 3) {
    throw std::invalid_argument(
        "grid needs at least three cells (reconstruction stencil minimum)");
  }
  if (!(xr > xl)) throw std::invalid_argument("domain must satisfy xr > xl");
  Array b(n + 1);
  const Real h = (xr - xl) / static_cast<Real>(n);
  for (int i = 0; i <= n; ++i) b[i] = xl + static_cast<Real>(i) * h;
  b[n] = xr;
  return b;
}

//! Maps a raw 64-bit word to [0, 1) with an explicit 53-bit construction so
//! that generated grids do not depend on the standard library's
//! uniform_real_distribution implementation.
Real unit_real(std::uint64_t word) {
  return static_cast<Real>(word >> 11) * 0x1.0p-53;
}

}  // namespace

Grid1D build_uniform_1d(Real xl, Real xr, int n) {
  Grid1D g;
  g.boundaries = equidistant_boundaries(xl, xr, n);
  finish_from_boundaries(g);
  // Boundary subtraction can differ in the last ulp between cells; uniform
  // grids must still take the equidistant code path, so store one width.
  const Real h = (xr - xl) / static_cast<Real>(n);
  g.widths.setConstant(h);
  g.centers = 0.5 * (g.boundaries.head(n) + g.boundaries.tail(n));
  g.uniform = true;
  return g;
}

Grid1D build_perturbed_1d(Real xl, Real xr, int n, Real c1, Real c2) {
  Grid1D g;
  Array b = equidistant_boundaries(xl, xr, n);
  for (int i = 1; i < n; ++i) {
    b[i] += c1 * std::sin(c2 * kTwoPi * b[i]);
  }
  g.boundaries = b;
  finish_from_boundaries(g);
  if (c1 == 0.0) {
    // Bit-identical to the uniform construction, including the path flag.
    return build_uniform_1d(xl, xr, n);
  }
  return g;
}

Grid1D build_random_1d(Real xl, Real xr, int n, Real amplitude,
                       std::uint64_t seed) {
  if (amplitude < 0.0 || amplitude >= 0.5) {
    throw std::invalid_argument(
        "random grid amplitude must lie in [0, 0.5) to keep boundaries "
        "strictly increasing");
  }
  if (amplitude == 0.0) return build_uniform_1d(xl, xr, n);
  Grid1D g;
  Array b = equidistant_boundaries(xl, xr, n);
  const Real h = (xr - xl) / static_cast<Real>(n);
  std::mt19937_64 rng(seed);
  for (int i = 1; i < n; ++i) {
    const Real u = unit_real(rng());  // in [0, 1)
    b[i] += amplitude * h * (2.0 * u - 1.0);
  }
  g.boundaries = b;
  finish_from_boundaries(g);
  return g;
}

Grid1D build_from_boundaries(const Array& boundaries) {
  Grid1D g;
  g.boundaries = boundaries;
  finish_from_boundaries(g);
  return g;
}

Grid2D build_uniform_2d(Real xl, Real xr, Real yl, Real yr, int nx, int ny) {
  Grid2D g;
  g.x = build_uniform_1d(xl, xr, nx);
  g.y = build_uniform_1d(yl, yr, ny);
  return g;
}

Grid2D build_nonuniform_2d(Real xl, Real xr, Real yl, Real yr, int nx, int ny,
                           Real delta_x, Real cx, Real delta_y, Real cy) {
  auto axis = [](Real lo, Real hi, int n, Real delta, Real c) {
    Array b = equidistant_boundaries(lo, hi, n);
    for (int i = 1; i < n; ++i) {
      // Half the sine period of the 1D builders: x -> x + delta*sin(c*pi*x).
      b[i] += delta * std::sin(c * 0.5 * kTwoPi * b[i]);
    }
    Grid1D g;
    g.boundaries = b;
    finish_from_boundaries(g);
    return g;
  };
  Grid2D g;
  g.x = (delta_x == 0.0) ? build_uniform_1d(xl, xr, nx)
                         : axis(xl, xr, nx, delta_x, cx);
  g.y = (delta_y == 0.0) ? build_uniform_1d(yl, yr, ny)
                         : axis(yl, yr, ny, delta_y, cy);
  return g;
}

void write_grid_csv(const Grid1D& g, std::ostream& os) {
  os.precision(17);
  for (int i = 0; i < static_cast<int>(g.boundaries.size()); ++i) {
    os << g.boundaries[i] << "\n";
  }
}

}  // namespace fv3
