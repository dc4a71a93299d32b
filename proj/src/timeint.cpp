//! \file timeint.cpp
//! \brief CFL control and the 1D advance loop.

#include "fv3/timeint.hpp"

#include <cmath>
#include <stdexcept>

namespace fv3 {

namespace {

void check_signal(Real s) {
  if (!(s > 0.0)) {
    throw std::domain_error(
        "maximum signal speed is zero: CFL puts no bound on dt, cap the "
        "step explicitly");
  }
}

}  // namespace

Real compute_dt_1d(const CellField1D& f, const PhysicsModel& phys, Real cfl) {
  Real s = 0.0;
  if (phys.kind == PhysicsModel::Kind::kAdvection) {
    s = std::abs(phys.ax);
  } else {
    for (int i = 0; i < f.n(); ++i) {
      Vec4 q;
      for (int k = 0; k < 4; ++k) q[k] = f.at(i, k);
      s = std::max(s, max_signal_x(q, phys.gamma));
    }
  }
  check_signal(s);
  return cfl * f.grid.min_width() / s;
}

Real compute_dt_2d(const CellField2D& f, const PhysicsModel& phys, Real cfl) {
  Real sx = 0.0, sy = 0.0;
  if (phys.kind == PhysicsModel::Kind::kAdvection) {
    sx = std::abs(phys.ax);
    sy = std::abs(phys.ay);
  } else {
    for (int j = 0; j < f.ny(); ++j) {
      for (int i = 0; i < f.nx(); ++i) {
        const Vec4 q = f.state(i, j);
        sx = std::max(sx, max_signal_x(q, phys.gamma));
        sy = std::max(sy, max_signal_y(q, phys.gamma));
      }
    }
  }
  check_signal(sx + sy);
  return cfl / (sx / f.grid.x.min_width() + sy / f.grid.y.min_width());
}

AdvanceResult advance_1d(CellField1D& f, const LimiterConfig& cfg,
                         const PhysicsModel& phys, Real cfl, Real t_end,
                         LimiterStats* stats) {
  const int n = f.n();
  const int nc = f.ncomp;
  auto interior = [&]() { return f.u.block(kGhost, 0, n, nc); };
  Array2 u0(n, nc), rhs(n, nc);

  AdvanceResult res;
  Real t = 0.0;
  f.fill_ghosts();
  while (t < t_end) {
    Real dt = compute_dt_1d(f, phys, cfl);
    bool last = false;
    if (t + dt >= t_end) {
      dt = t_end - t;
      last = true;
    }
    u0 = interior();
    try {
      rhs_1d(f, cfg, phys, rhs, stats);
      interior() = u0 + dt * rhs;
      f.fill_ghosts();
      rhs_1d(f, cfg, phys, rhs, stats);
      interior() = 0.75 * u0 + 0.25 * (interior() + dt * rhs);
      f.fill_ghosts();
      rhs_1d(f, cfg, phys, rhs, stats);
      interior() = (1.0 / 3.0) * u0 + (2.0 / 3.0) * (interior() + dt * rhs);
      f.fill_ghosts();
    } catch (...) {
      interior() = u0;
      f.fill_ghosts();
      throw;
    }
    t = last ? t_end : t + dt;
    ++res.steps;
  }
  res.t = t;
  return res;
}

}  // namespace fv3
