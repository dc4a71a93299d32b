//! \file field.cpp
//! \brief Ghost-frame management for 1D and 2D fields.

#include "fv3/field.hpp"

#include <stdexcept>

namespace fv3 {

namespace {

//! Extends interior widths into the ghost frame: periodic wraps, every other
//! boundary type mirrors the edge widths so reflected geometry is consistent.
Array extend_widths(const Array& w, bool periodic) {
  const int n = static_cast<int>(w.size());
  Array e(n + 2 * kGhost);
  e.segment(kGhost, n) = w;
  for (int g = 0; g < kGhost; ++g) {
    if (periodic) {
      e[kGhost - 1 - g] = w[n - 1 - g];
      e[kGhost + n + g] = w[g];
    } else {
      e[kGhost - 1 - g] = w[g];
      e[kGhost + n + g] = w[n - 1 - g];
    }
  }
  return e;
}

//! Ghost-cell centers from extended widths, anchored at the domain ends.
Array extend_centers(const Grid1D& g, const Array& wext) {
  const int n = g.n();
  Array c(n + 2 * kGhost);
  c.segment(kGhost, n) = g.centers;
  Real b = g.xl;
  for (int gg = 0; gg < kGhost; ++gg) {
    const Real w = wext[kGhost - 1 - gg];
    c[kGhost - 1 - gg] = b - 0.5 * w;
    b -= w;
  }
  b = g.xr;
  for (int gg = 0; gg < kGhost; ++gg) {
    const Real w = wext[kGhost + n + gg];
    c[kGhost + n + gg] = b + 0.5 * w;
    b += w;
  }
  return c;
}

}  // namespace

CellField1D CellField1D::make(Grid1D g, int ncomp, Bc1D bc) {
  CellField1D f;
  f.ncomp = ncomp;
  f.bc = bc;
  f.wext = extend_widths(g.widths, bc == Bc1D::kPeriodic);
  f.grid = std::move(g);
  f.u.setZero(f.grid.n() + 2 * kGhost, ncomp);
  return f;
}

void CellField1D::fill_ghosts() {
  const int nn = n();
  for (int k = 0; k < ncomp; ++k) {
    for (int g = 1; g <= kGhost; ++g) {
      if (bc == Bc1D::kPeriodic) {
        at(-g, k) = at(nn - g, k);
        at(nn - 1 + g, k) = at(g - 1, k);
      } else {
        at(-g, k) = at(0, k);
        at(nn - 1 + g, k) = at(nn - 1, k);
      }
    }
  }
}

CellField2D CellField2D::make(Grid2D g, int ncomp,
                              const std::array<Boundary2D, 4>& bc) {
  auto periodic = [&](Face2D f) {
    return bc[static_cast<int>(f)].kind == Boundary2D::Kind::kPeriodic;
  };
  const bool px = periodic(Face2D::kXlo);
  const bool py = periodic(Face2D::kYlo);
  if (px != periodic(Face2D::kXhi) || py != periodic(Face2D::kYhi)) {
    throw std::invalid_argument("periodic boundaries must come in pairs");
  }
  CellField2D f;
  f.ncomp = ncomp;
  f.bc = bc;
  f.wx = extend_widths(g.x.widths, px);
  f.wy = extend_widths(g.y.widths, py);
  f.cx = extend_centers(g.x, f.wx);
  f.cy = extend_centers(g.y, f.wy);
  f.grid = std::move(g);
  f.q.assign(ncomp, Array2::Zero(f.grid.nx() + 2 * kGhost,
                                 f.grid.ny() + 2 * kGhost));
  return f;
}

namespace {

//! Applies one boundary prescription along one side of the frame. The sweep
//! is expressed through index lambdas so the x and y passes are the same
//! code path, which keeps the two directions exactly symmetric.
struct GhostWriter {
  CellField2D* f;
  bool along_x;  // true: filling x-ghosts (columns), false: y-ghosts (rows)

  Real get(int k, int i, int j) const {
    return along_x ? f->at(k, i, j) : f->at(k, j, i);
  }
  void set(int k, int i, int j, Real v) const {
    (along_x ? f->at(k, i, j) : f->at(k, j, i)) = v;
  }
  Vec4 state(int i, int j) const {
    Vec4 s;
    for (int k = 0; k < f->ncomp; ++k) s[k] = get(k, i, j);
    for (int k = f->ncomp; k < 4; ++k) s[k] = 0.0;
    return s;
  }
  void set_all(int i, int j, const Vec4& s) const {
    for (int k = 0; k < f->ncomp; ++k) set(k, i, j, s[k]);
  }
  Real coord_main(int i) const {
    return along_x ? f->cx[i + kGhost] : f->cy[i + kGhost];
  }
  Real coord_cross(int j) const {
    return along_x ? f->cy[j + kGhost] : f->cx[j + kGhost];
  }
  int normal_comp() const { return along_x ? kMx : kMy; }
};

void fill_side(const GhostWriter& w, const Boundary2D& b, int n, bool low,
               int cross_begin, int cross_end, Real t) {
  using Kind = Boundary2D::Kind;
  for (int j = cross_begin; j < cross_end; ++j) {
    for (int g = 1; g <= kGhost; ++g) {
      const int ighost = low ? -g : n - 1 + g;
      const int imirror = low ? g - 1 : n - g;
      const int iwrap = low ? n - g : g - 1;
      const int icopy = low ? 0 : n - 1;
      switch (b.kind) {
        case Kind::kPeriodic:
          w.set_all(ighost, j, w.state(iwrap, j));
          break;
        case Kind::kOutflow:
          w.set_all(ighost, j, w.state(icopy, j));
          break;
        case Kind::kReflect: {
          Vec4 s = w.state(imirror, j);
          if (w.f->ncomp == 4) s[w.normal_comp()] = -s[w.normal_comp()];
          w.set_all(ighost, j, s);
          break;
        }
        case Kind::kCustom: {
          const Vec4 mirror = w.state(imirror, j);
          const Real cm = w.coord_main(ighost);
          const Real cc = w.coord_cross(j);
          const Real x = w.along_x ? cm : cc;
          const Real y = w.along_x ? cc : cm;
          w.set_all(ighost, j, b.custom(x, y, t, mirror));
          break;
        }
      }
    }
  }
}

}  // namespace

void CellField2D::fill_ghosts(Real t) {
  const int mx = nx();
  const int my = ny();
  // X-ghost columns for interior rows first, then y-ghosts across the full
  // extended width so corner ghosts pick up the already-filled columns.
  GhostWriter wx_pass{this, true};
  fill_side(wx_pass, bc[static_cast<int>(Face2D::kXlo)], mx, true, 0, my, t);
  fill_side(wx_pass, bc[static_cast<int>(Face2D::kXhi)], mx, false, 0, my, t);
  GhostWriter wy_pass{this, false};
  fill_side(wy_pass, bc[static_cast<int>(Face2D::kYlo)], my, true, -kGhost,
            mx + kGhost, t);
  fill_side(wy_pass, bc[static_cast<int>(Face2D::kYhi)], my, false, -kGhost,
            mx + kGhost, t);
}

}  // namespace fv3
