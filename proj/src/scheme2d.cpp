//! \file scheme2d.cpp
//! \brief Five-stage 2D RHS: face-average reconstruction, transverse
//!        corrections, pointwise Riemann fluxes, and flux differencing.
//!
//! x/y symmetry discipline: every x-direction loop body is the exact mirror
//! of its y-direction counterpart (i<->j, dx<->dy, mx<->my). The per-cell
//! slope work is shared through limited_pair so transposed input fields
//! produce bit-identical transposed results. All accumulations (boundary
//! integrals, flux differences) are written either as per-entry expressions
//! or as fixed-order sums whose mirrored counterparts are commutations of
//! the same two addends.

#include "fv3/scheme2d.hpp"

#include <atomic>
#include <sstream>
#include <utility>

#include "fv3/timeint.hpp"
#include "fv3/util.hpp"

namespace fv3 {

namespace {

//! Limited right/left half-slopes of one swept cell, shared by the x- and
//! y-direction sweeps (identical expression tree keeps them bit-compatible).
inline void limited_pair(Real um, Real ui, Real up, bool uniform, Real wm,
                         Real wi, Real wp, const LimiterConfig& cfg,
                         LimiterStats* stats, Real& hr, Real& hl) {
  const SlopePair s{ui - um, up - ui};
  if (uniform) {
    hr = apply_limiter(cfg, s, stats);
    hl = apply_limiter(cfg, SlopePair{s.dp, s.dm}, stats);
  } else {
    const WidthTriple w{wm, wi, wp};
    const Real outer = (3.0 * w.dxi) / ((w.dxm + w.dxi) + w.dxp);
    hr = outer * apply_limiter(cfg, scale_slopes_right(s, w), stats);
    hl = outer * apply_limiter(cfg, scale_slopes_left(s, w), stats);
  }
}

//! Thread-safe branch-statistics sink: workers accumulate locally and a
//! single pair of atomics merges the chunks.
struct StatsSink {
  std::atomic<std::int64_t> smooth{0};
  std::atomic<std::int64_t> limited{0};

  void merge(const LimiterStats& s) {
    smooth.fetch_add(s.smooth, std::memory_order_relaxed);
    limited.fetch_add(s.limited, std::memory_order_relaxed);
  }
  void flush(LimiterStats* out) const {
    if (out != nullptr) {
      out->smooth += smooth.load();
      out->limited += limited.load();
    }
  }
};

void sweep_x(const CellField2D& f, const LimiterConfig& cfg, Workspace2D& ws,
             StatsSink* sink) {
  const int nx = f.nx();
  const int ny = f.ny();
  const bool uniform = f.grid.x.uniform;
  for (int k = 0; k < f.ncomp; ++k) {
    Array2& am = ws.xm_avg[k];
    Array2& ap = ws.xp_avg[k];
    parallel_for(-2, ny + 2, [&](int j) {
      LimiterStats local;
      LimiterStats* lp = (sink != nullptr) ? &local : nullptr;
      for (int i = -1; i <= nx; ++i) {
        Real hr, hl;
        limited_pair(f.at(k, i - 1, j), f.at(k, i, j), f.at(k, i + 1, j),
                     uniform, f.dx(i - 1), f.dx(i), f.dx(i + 1), cfg, lp, hr,
                     hl);
        if (i + 1 <= nx) am(i + 1, j + 2) = f.at(k, i, j) + 0.5 * hr;
        if (i >= 0) ap(i, j + 2) = f.at(k, i, j) - 0.5 * hl;
      }
      if (sink != nullptr) sink->merge(local);
    });
  }
}

void sweep_y(const CellField2D& f, const LimiterConfig& cfg, Workspace2D& ws,
             StatsSink* sink) {
  const int nx = f.nx();
  const int ny = f.ny();
  const bool uniform = f.grid.y.uniform;
  for (int k = 0; k < f.ncomp; ++k) {
    Array2& am = ws.ym_avg[k];
    Array2& ap = ws.yp_avg[k];
    parallel_for(-2, nx + 2, [&](int i) {
      LimiterStats local;
      LimiterStats* lp = (sink != nullptr) ? &local : nullptr;
      for (int j = -1; j <= ny; ++j) {
        Real hr, hl;
        limited_pair(f.at(k, i, j - 1), f.at(k, i, j), f.at(k, i, j + 1),
                     uniform, f.dy(j - 1), f.dy(j), f.dy(j + 1), cfg, lp, hr,
                     hl);
        if (j + 1 <= ny) am(i + 2, j + 1) = f.at(k, i, j) + 0.5 * hr;
        if (j >= 0) ap(i + 2, j) = f.at(k, i, j) - 0.5 * hl;
      }
      if (sink != nullptr) sink->merge(local);
    });
  }
}

//! Rho >= eps, p >= eps, all finite: the guard's acceptance test.
inline bool valid_eps(const Vec4& q, Real gamma, Real eps) {
  return q[kRho] >= eps && q.isFinite().all() && pressure(q, gamma) >= eps;
}

//! Blends the face point values of every cell toward its average until
//! density and pressure are positive. Cells [-1,nx] x [-1,ny] own up to four
//! of the stored point states; each state is pulled by the owning cell's
//! theta only, so interface pairs may receive different factors (the shared
//! interface flux keeps conservation regardless).
void positivity_pass(const CellField2D& f, const PhysicsModel& phys,
                     Workspace2D& ws) {
  const int nx = f.nx();
  const int ny = f.ny();
  const Real eps = 1e-10;
  parallel_for(-1, ny + 1, [&](int j) {
    for (int i = -1; i <= nx; ++i) {
      Vec4 st[4];
      int m = 0;
      const bool has_xm = (i + 1 <= nx);
      const bool has_xp = (i >= 0);
      const bool has_ym = (j + 1 <= ny);
      const bool has_yp = (j >= 0);
      for (int k = 0; k < 4; ++k) {
        if (has_xm) st[0][k] = ws.xm_pt[k](i + 1, j + 1);
        if (has_xp) st[1][k] = ws.xp_pt[k](i, j + 1);
        if (has_ym) st[2][k] = ws.ym_pt[k](i + 1, j + 1);
        if (has_yp) st[3][k] = ws.yp_pt[k](i + 1, j);
      }
      Vec4 own[4];
      if (has_xm) own[m++] = st[0];
      if (has_xp) own[m++] = st[1];
      if (has_ym) own[m++] = st[2];
      if (has_yp) own[m++] = st[3];
      bool all_valid = true;
      for (int s = 0; s < m; ++s) {
        all_valid = all_valid && valid_eps(own[s], phys.gamma, eps);
      }
      if (all_valid) continue;

      const Vec4 mean = f.state(i, j);
      const Real theta = positivity_theta(mean, own, m, phys.gamma, eps);
      for (int s = 0; s < m; ++s) own[s] = mean + theta * (own[s] - mean);
      int w = 0;
      for (int k = 0; k < 4; ++k) {
        int ww = w;
        if (has_xm) ws.xm_pt[k](i + 1, j + 1) = own[ww++][k];
        if (has_xp) ws.xp_pt[k](i, j + 1) = own[ww++][k];
        if (has_ym) ws.ym_pt[k](i + 1, j + 1) = own[ww++][k];
        if (has_yp) ws.yp_pt[k](i + 1, j) = own[ww++][k];
      }
    }
  });
}

void face_point_values(const CellField2D& f, const Scheme2DConfig& cfg,
                       Workspace2D& ws) {
  const int nx = f.nx();
  const int ny = f.ny();
  for (int k = 0; k < f.ncomp; ++k) {
    const Array2& xm = ws.xm_avg[k];
    const Array2& xp = ws.xp_avg[k];
    Array2& pm = ws.xm_pt[k];
    Array2& pp = ws.xp_pt[k];
    parallel_for(-1, ny + 1, [&](int j) {
      for (int fi = 0; fi <= nx; ++fi) {
        if (cfg.order_fix) {
          pm(fi, j + 1) = transverse_to_point(xm(fi, j + 2), xm(fi, j + 1),
                                              xm(fi, j + 3));
          pp(fi, j + 1) = transverse_to_point(xp(fi, j + 2), xp(fi, j + 1),
                                              xp(fi, j + 3));
        } else {
          pm(fi, j + 1) = xm(fi, j + 2);
          pp(fi, j + 1) = xp(fi, j + 2);
        }
      }
    });
    const Array2& ym = ws.ym_avg[k];
    const Array2& yp = ws.yp_avg[k];
    Array2& qm = ws.ym_pt[k];
    Array2& qp = ws.yp_pt[k];
    parallel_for(0, ny + 1, [&](int fj) {
      for (int i = -1; i <= nx; ++i) {
        if (cfg.order_fix) {
          qm(i + 1, fj) = transverse_to_point(ym(i + 2, fj), ym(i + 1, fj),
                                              ym(i + 3, fj));
          qp(i + 1, fj) = transverse_to_point(yp(i + 2, fj), yp(i + 1, fj),
                                              yp(i + 3, fj));
        } else {
          qm(i + 1, fj) = ym(i + 2, fj);
          qp(i + 1, fj) = yp(i + 2, fj);
        }
      }
    });
  }
}

[[noreturn]] void rethrow_at_face(const PhysicsError& e, char axis, int fi,
                                  int j) {
  std::ostringstream msg;
  msg << e.what() << " [" << axis << "-face " << fi << ", transverse cell "
      << j << "]";
  throw PhysicsError(msg.str());
}

void point_fluxes(const CellField2D& f, const PhysicsModel& phys,
                  Workspace2D& ws) {
  const int nx = f.nx();
  const int ny = f.ny();
  if (phys.kind == PhysicsModel::Kind::kAdvection) {
    parallel_for(-1, ny + 1, [&](int j) {
      for (int fi = 0; fi <= nx; ++fi) {
        ws.fx_pt[0](fi, j + 1) = upwind_flux(phys.ax, ws.xm_pt[0](fi, j + 1),
                                             ws.xp_pt[0](fi, j + 1));
      }
    });
    parallel_for(0, ny + 1, [&](int fj) {
      for (int i = -1; i <= nx; ++i) {
        ws.fy_pt[0](i + 1, fj) = upwind_flux(phys.ay, ws.ym_pt[0](i + 1, fj),
                                             ws.yp_pt[0](i + 1, fj));
      }
    });
    return;
  }
  parallel_for(-1, ny + 1, [&](int j) {
    Vec4 ql, qr;
    for (int fi = 0; fi <= nx; ++fi) {
      for (int k = 0; k < 4; ++k) {
        ql[k] = ws.xm_pt[k](fi, j + 1);
        qr[k] = ws.xp_pt[k](fi, j + 1);
      }
      try {
        const Vec4 fc = rusanov_x(ql, qr, phys.gamma);
        for (int k = 0; k < 4; ++k) ws.fx_pt[k](fi, j + 1) = fc[k];
      } catch (const PhysicsError& e) {
        rethrow_at_face(e, 'x', fi, j);
      }
    }
  });
  parallel_for(0, ny + 1, [&](int fj) {
    Vec4 ql, qr;
    for (int i = -1; i <= nx; ++i) {
      for (int k = 0; k < 4; ++k) {
        ql[k] = ws.ym_pt[k](i + 1, fj);
        qr[k] = ws.yp_pt[k](i + 1, fj);
      }
      try {
        const Vec4 fc = rusanov_y(ql, qr, phys.gamma);
        for (int k = 0; k < 4; ++k) ws.fy_pt[k](i + 1, fj) = fc[k];
      } catch (const PhysicsError& e) {
        rethrow_at_face(e, 'y', fj, i);
      }
    }
  });
}

void face_average_fluxes(const CellField2D& f, const Scheme2DConfig& cfg,
                         Workspace2D& ws) {
  const int nx = f.nx();
  const int ny = f.ny();
  for (int k = 0; k < f.ncomp; ++k) {
    const Array2& fx = ws.fx_pt[k];
    Array2& cx = ws.fxc[k];
    parallel_for(0, ny, [&](int j) {
      for (int fi = 0; fi <= nx; ++fi) {
        cx(fi, j) = cfg.order_fix
                        ? transverse_to_average(fx(fi, j + 1), fx(fi, j),
                                                fx(fi, j + 2))
                        : fx(fi, j + 1);
      }
    });
    const Array2& fy = ws.fy_pt[k];
    Array2& cy = ws.fyc[k];
    parallel_for(0, ny + 1, [&](int fj) {
      for (int i = 0; i < nx; ++i) {
        cy(i, fj) = cfg.order_fix
                        ? transverse_to_average(fy(i + 1, fj), fy(i, fj),
                                                fy(i + 2, fj))
                        : fy(i + 1, fj);
      }
    });
  }
}

}  // namespace

void Workspace2D::resize(int nx, int ny, int ncomp) {
  auto fit = [](std::vector<Array2>& v, int ncomp_, int rows, int cols) {
    v.resize(ncomp_);
    for (Array2& a : v) {
      if (a.rows() != rows || a.cols() != cols) a.resize(rows, cols);
    }
  };
  fit(xm_avg, ncomp, nx + 1, ny + 4);
  fit(xp_avg, ncomp, nx + 1, ny + 4);
  fit(ym_avg, ncomp, nx + 4, ny + 1);
  fit(yp_avg, ncomp, nx + 4, ny + 1);
  fit(xm_pt, ncomp, nx + 1, ny + 2);
  fit(xp_pt, ncomp, nx + 1, ny + 2);
  fit(fx_pt, ncomp, nx + 1, ny + 2);
  fit(ym_pt, ncomp, nx + 2, ny + 1);
  fit(yp_pt, ncomp, nx + 2, ny + 1);
  fit(fy_pt, ncomp, nx + 2, ny + 1);
  fit(fxc, ncomp, nx + 1, ny);
  fit(fyc, ncomp, nx, ny + 1);
}

void reconstruct_faces_2d(const CellField2D& f, const Scheme2DConfig& cfg,
                          Workspace2D& ws, LimiterStats* stats) {
  ws.resize(f.nx(), f.ny(), f.ncomp);
  StatsSink sink;
  StatsSink* sp = (stats != nullptr) ? &sink : nullptr;
  sweep_x(f, cfg.x_cfg(), ws, sp);
  sweep_y(f, cfg.y_cfg(), ws, sp);
  sink.flush(stats);
}

void rhs_2d(const CellField2D& f, const Scheme2DConfig& cfg,
            const PhysicsModel& phys, Workspace2D& ws,
            std::vector<Array2>& dudt, LimiterStats* stats,
            Vec4* boundary_net) {
  const int nx = f.nx();
  const int ny = f.ny();

  reconstruct_faces_2d(f, cfg, ws, stats);
  face_point_values(f, cfg, ws);
  if (cfg.positivity && phys.kind == PhysicsModel::Kind::kEuler) {
    positivity_pass(f, phys, ws);
  }
  point_fluxes(f, phys, ws);
  face_average_fluxes(f, cfg, ws);

  dudt.resize(f.ncomp);
  for (int k = 0; k < f.ncomp; ++k) {
    Array2& out = dudt[k];
    if (out.rows() != nx || out.cols() != ny) out.resize(nx, ny);
    const Array2& cx = ws.fxc[k];
    const Array2& cy = ws.fyc[k];
    parallel_for(0, ny, [&](int j) {
      for (int i = 0; i < nx; ++i) {
        out(i, j) = -((cx(i + 1, j) - cx(i, j)) / f.dx(i) +
                      (cy(i, j + 1) - cy(i, j)) / f.dy(j));
      }
    });
  }

  if (boundary_net != nullptr) {
    boundary_net->setZero();
    for (int k = 0; k < f.ncomp; ++k) {
      Real bx = 0.0;
      for (int j = 0; j < ny; ++j) {
        bx += f.dy(j) * (ws.fxc[k](nx, j) - ws.fxc[k](0, j));
      }
      Real by = 0.0;
      for (int i = 0; i < nx; ++i) {
        by += f.dx(i) * (ws.fyc[k](i, ny) - ws.fyc[k](i, 0));
      }
      (*boundary_net)[k] = bx + by;
    }
  }
}

Advance2DResult advance_2d(CellField2D& f, const Scheme2DConfig& cfg,
                           const PhysicsModel& phys, Real cfl, Real t_end,
                           LimiterStats* stats, MassLedger* ledger,
                           const StepHook2D& hook) {
  const int nx = f.nx();
  const int ny = f.ny();
  const int nc = f.ncomp;
  auto interior = [&](int k) -> decltype(f.q[k].block(0, 0, 1, 1)) {
    return f.q[k].block(kGhost, kGhost, nx, ny);
  };

  Workspace2D ws;
  std::vector<Array2> u0(nc), rhs(nc);
  Vec4 net[3];
  Vec4* netp = (ledger != nullptr) ? net : nullptr;

  Advance2DResult res;
  Real t = 0.0;
  while (t < t_end) {
    Real dt = compute_dt_2d(f, phys, cfl);
    bool last = false;
    if (t + dt >= t_end) {
      dt = t_end - t;
      last = true;
    }
    for (int k = 0; k < nc; ++k) u0[k] = interior(k);
    try {
      f.fill_ghosts(t);
      rhs_2d(f, cfg, phys, ws, rhs, stats, netp ? &net[0] : nullptr);
      for (int k = 0; k < nc; ++k) interior(k) = u0[k] + dt * rhs[k];

      f.fill_ghosts(t + dt);
      rhs_2d(f, cfg, phys, ws, rhs, stats, netp ? &net[1] : nullptr);
      for (int k = 0; k < nc; ++k) {
        interior(k) = 0.75 * u0[k] + 0.25 * (interior(k) + dt * rhs[k]);
      }

      f.fill_ghosts(t + 0.5 * dt);
      rhs_2d(f, cfg, phys, ws, rhs, stats, netp ? &net[2] : nullptr);
      for (int k = 0; k < nc; ++k) {
        interior(k) =
            (1.0 / 3.0) * u0[k] + (2.0 / 3.0) * (interior(k) + dt * rhs[k]);
      }
    } catch (...) {
      for (int k = 0; k < nc; ++k) interior(k) = u0[k];
      f.fill_ghosts(t);
      throw;
    }
    if (ledger != nullptr) {
      // The RK3 update is u + dt*(L0/6 + L1/6 + 2*L2/3), so the mass that
      // crossed the boundary this step uses the same stage weights.
      ledger->outflow +=
          dt * ((1.0 / 6.0) * net[0] + (1.0 / 6.0) * net[1] +
                (2.0 / 3.0) * net[2]);
    }
    t = last ? t_end : t + dt;
    ++res.steps;
    if (hook) hook(res.steps, t, f);
  }
  res.t = t;
  return res;
}

}  // namespace fv3
