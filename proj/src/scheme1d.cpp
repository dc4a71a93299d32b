//! \file scheme1d.cpp
//! \brief 1D reconstruction sweep and flux-difference RHS.

#include "fv3/scheme1d.hpp"

namespace fv3 {

void reconstruct_1d(const CellField1D& f, const LimiterConfig& cfg,
                    Faces1D& faces, LimiterStats* stats) {
  const int n = f.n();
  faces.resize(n + 1, f.ncomp);
  const bool uniform = f.grid.uniform;

  for (int k = 0; k < f.ncomp; ++k) {
    // Sweep every cell that touches an interface: -1 .. n. Each cell
    // contributes its right state to face i+1 and its left state to face i.
    for (int i = -1; i <= n; ++i) {
      const Real um = f.at(i - 1, k);
      const Real ui = f.at(i, k);
      const Real up = f.at(i + 1, k);
      const SlopePair s{ui - um, up - ui};
      Real hr, hl;
      if (uniform) {
        hr = apply_limiter(cfg, s, stats);
        hl = apply_limiter(cfg, SlopePair{s.dp, s.dm}, stats);
      } else {
        const WidthTriple w{f.width(i - 1), f.width(i), f.width(i + 1)};
        const Real outer = (3.0 * w.dxi) / ((w.dxm + w.dxi) + w.dxp);
        hr = outer * apply_limiter(cfg, scale_slopes_right(s, w), stats);
        hl = outer * apply_limiter(cfg, scale_slopes_left(s, w), stats);
      }
      if (i + 1 <= n) faces.minus(i + 1, k) = ui + 0.5 * hr;
      if (i >= 0) faces.plus(i, k) = ui - 0.5 * hl;
    }
  }
}

void rhs_1d(const CellField1D& f, const LimiterConfig& cfg,
            const PhysicsModel& phys, Array2& dudt, LimiterStats* stats) {
  const int n = f.n();
  Faces1D faces;
  reconstruct_1d(f, cfg, faces, stats);
  dudt.resize(n, f.ncomp);

  if (phys.kind == PhysicsModel::Kind::kAdvection) {
    Array flux(n + 1);
    for (int fidx = 0; fidx <= n; ++fidx) {
      flux[fidx] = upwind_flux(phys.ax, faces.minus(fidx, 0), faces.plus(fidx, 0));
    }
    for (int i = 0; i < n; ++i) {
      dudt(i, 0) = -(flux[i + 1] - flux[i]) / f.grid.widths[i];
    }
    return;
  }

  // Euler along x: 4 components, Rusanov interface flux.
  Array2 flux(n + 1, 4);
  for (int fidx = 0; fidx <= n; ++fidx) {
    Vec4 ql, qr;
    for (int k = 0; k < 4; ++k) {
      ql[k] = faces.minus(fidx, k);
      qr[k] = faces.plus(fidx, k);
    }
    const Vec4 fc = rusanov_x(ql, qr, phys.gamma);
    for (int k = 0; k < 4; ++k) flux(fidx, k) = fc[k];
  }
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < 4; ++k) {
      dudt(i, k) = -(flux(i + 1, k) - flux(i, k)) / f.grid.widths[i];
    }
  }
}

}  // namespace fv3
