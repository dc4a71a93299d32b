//! \file kernels.hpp
//! \brief Pointwise reconstruction kernels: the compact third-order limited
//!        slope functions (equidistant and non-equidistant), WENO3
//!        comparison kernels, and the exact quadratic rebuild used as their
//!        smooth-case reference.
//!
//! Conventions. A kernel H(dm, dp) combines the backward slope
//! dm = u_i - u_{i-1} and the forward slope dp = u_{i+1} - u_i of the swept
//! cell into one limited slope; the right interface value of the cell is
//! u_i + H(dm, dp)/2 and the left interface value is u_i - H(dp, dm)/2
//! (arguments swapped). sgn(0) is taken as +1 throughout.

#ifndef FV3_KERNELS_HPP_
#define FV3_KERNELS_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "fv3/types.hpp"

namespace fv3 {

//! Slope pair (backward, forward) as seen from the swept cell.
struct SlopePair {
  Real dm;
  Real dp;
};

//! Widths of the swept cell and its two neighbours.
struct WidthTriple {
  Real dxm;  // left neighbour
  Real dxi;  // swept cell
  Real dxp;  // right neighbour

  //! Distance between the two cell centers across the left interface.
  Real half_m() const { return 0.5 * (dxm + dxi); }
  //! Distance between the two cell centers across the right interface.
  Real half_p() const { return 0.5 * (dxi + dxp); }
  //! Three-cell mean width.
  Real third() const { return ((dxm + dxi) + dxp) / 3.0; }
};

//! Precomputed smoothness-switch data. The switch compares dm^2 + dp^2
//! against tau = (5/2) * (alpha * dx^2)^2 once per kernel call instead of
//! forming the indicator ratio in every cell; alpha bounds |u0''| (1D) or
//! |laplacian(u0)| (2D) of the initial data and dx is the mean mesh width.
struct SwitchParams {
  Real alpha = 0.0;
  Real dx = 0.0;
  Real tau = 0.0;

  static SwitchParams make(Real alpha, Real dx) {
    SwitchParams p;
    p.alpha = alpha;
    p.dx = dx;
    p.tau = 2.5 * square(alpha * dx * dx);
    return p;
  }
};

//! Counts how often the smoothness switch took each branch.
struct LimiterStats {
  std::int64_t smooth = 0;   // unlimited third-order branch
  std::int64_t limited = 0;  // limited branch

  void reset() { smooth = limited = 0; }
};

inline Real sgn_pos(Real x) { return x < 0.0 ? -1.0 : 1.0; }

//! Unlimited third-order slope, equidistant cells.
inline Real h3(SlopePair s) { return (2.0 * s.dp + s.dm) / 3.0; }

//! Limited third-order slope, equidistant cells.
inline Real h3l(SlopePair s) {
  const Real sg = sgn_pos(s.dp);
  const Real g3 = sg * h3(s);
  const Real inner =
      std::min(std::min(2.0 * sg * s.dm, g3), 1.5 * std::abs(s.dp));
  return sg * std::max(0.0, std::min(g3, std::max(-sg * s.dm, inner)));
}

//! True when the switch classifies the slope pair as smooth.
inline bool switch_smooth(SlopePair s, const SwitchParams& p) {
  return s.dm * s.dm + s.dp * s.dp < p.tau;
}

//! Switched kernel: unlimited slope where the data is resolved and smooth,
//! limited slope elsewhere.
inline Real h3lc(SlopePair s, const SwitchParams& p) {
  return switch_smooth(s, p) ? h3(s) : h3l(s);
}

//! Unlimited third-order slope on non-equidistant cells. Reduces bit-exactly
//! to h3 when all three widths are equal (every scale factor is then a
//! quotient of identical expressions, i.e. exactly 1.0).
inline Real h3_neq(SlopePair s, const WidthTriple& w) {
  const Real hm = w.half_m();
  const Real hp = w.half_p();
  const Real outer = (3.0 * w.dxi) / ((w.dxm + w.dxi) + w.dxp);
  return outer * (2.0 * (hm / hp) * s.dp + (w.dxp / hm) * s.dm) / 3.0;
}

//! Slope scaling that maps the non-equidistant right-interface problem onto
//! the equidistant kernels: returns the pair fed to h3/h3l/h3lc.
inline SlopePair scale_slopes_right(SlopePair s, const WidthTriple& w) {
  const Real hm = w.half_m();
  const Real hp = w.half_p();
  return SlopePair{(w.dxp / hm) * s.dm, (hm / hp) * s.dp};
}

//! Mirror image of scale_slopes_right for the left interface. The physical
//! pair (dm, dp) is given in grid orientation; the returned pair is already
//! in the swapped argument order the kernels expect for a left interface.
inline SlopePair scale_slopes_left(SlopePair s, const WidthTriple& w) {
  const Real hm = w.half_m();
  const Real hp = w.half_p();
  return SlopePair{(w.dxm / hp) * s.dp, (hp / hm) * s.dm};
}

enum class Side { kLeft, kRight };

//! Switched limited kernel on non-equidistant cells: scales the slopes for
//! the requested interface and applies the equidistant switched kernel.
inline Real h3lc_neq(SlopePair s, const WidthTriple& w, Side side,
                     const SwitchParams& p) {
  const SlopePair q =
      (side == Side::kRight) ? scale_slopes_right(s, w) : scale_slopes_left(s, w);
  return h3lc(q, p);
}

enum class WenoVariant { kJs, kZ };

//! Third-order WENO slope (two two-point stencils, linear weights 1/3 and
//! 2/3, smoothness indicators dm^2 and dp^2). kJs uses the classical inverse
//! square weights, kZ the |b0 - b1| global indicator.
inline Real weno3(SlopePair s, WenoVariant v, Real eps = 1e-6) {
  const Real b0 = s.dm * s.dm;
  const Real b1 = s.dp * s.dp;
  Real a0, a1;
  if (v == WenoVariant::kJs) {
    a0 = (1.0 / 3.0) / square(eps + b0);
    a1 = (2.0 / 3.0) / square(eps + b1);
  } else {
    const Real t = std::abs(b0 - b1);
    a0 = (1.0 / 3.0) * (1.0 + t / (b0 + eps));
    a1 = (2.0 / 3.0) * (1.0 + t / (b1 + eps));
  }
  return (a0 * s.dm + a1 * s.dp) / (a0 + a1);
}

//! Coefficients of p(x) = a*(x - x_i)^2 + b*(x - x_i) + c.
struct QuadCoeffs {
  Real a;
  Real b;
  Real c;
};

//! Closed-form quadratic whose cell averages over the three cells around x_i
//! equal (um, ui, up). This is the polynomial the unlimited non-equidistant
//! slope reproduces exactly; it doubles as the smooth-case oracle in tests.
inline QuadCoeffs cell_average_parabola(Real um, Real ui, Real up,
                                        const WidthTriple& w) {
  // Eliminating c from the three average conditions leaves
  //   a*(dxi + 2*dxm)/3 - b = (um - ui)/hm
  //   a*(dxi + 2*dxp)/3 + b = (up - ui)/hp
  // whose sum and difference give a and b; the middle-cell condition then
  // gives c (average of a quadratic over its own cell is a*dxi^2/12 + c).
  const Real hm = w.half_m();
  const Real hp = w.half_p();
  const Real d3 = w.third();
  const Real a = 0.5 * (hp * (um - ui) + hm * (up - ui)) / (hm * hp * d3);
  const Real b = 0.5 * ((up - ui) / hp - (um - ui) / hm) -
                 a * (w.dxp - w.dxm) / 3.0;
  const Real c = ui - a * w.dxi * w.dxi / 12.0;
  return QuadCoeffs{a, b, c};
}

//! Selectable reconstruction rule for the sweeps. kUpwind disables
//! reconstruction entirely (H == 0, first-order upwind) and exists as a
//! diagnostic anchor for convergence tooling.
enum class Limiter { kH3, kH3L, kH3LC, kWeno3Js, kWeno3Z, kUpwind };

struct LimiterConfig {
  Limiter kind = Limiter::kH3LC;
  SwitchParams sw;
  Real weno_eps = 1e-6;
};

//! Applies the configured kernel to an (already scaled, already ordered)
//! slope pair. Branch statistics are recorded only for the switched kernel.
inline Real apply_limiter(const LimiterConfig& cfg, SlopePair s,
                          LimiterStats* stats) {
  switch (cfg.kind) {
    case Limiter::kH3:
      return h3(s);
    case Limiter::kH3L:
      return h3l(s);
    case Limiter::kH3LC: {
      const bool smooth = switch_smooth(s, cfg.sw);
      if (stats != nullptr) {
        if (smooth) {
          ++stats->smooth;
        } else {
          ++stats->limited;
        }
      }
      return smooth ? h3(s) : h3l(s);
    }
    case Limiter::kWeno3Js:
      return weno3(s, WenoVariant::kJs, cfg.weno_eps);
    case Limiter::kWeno3Z:
      return weno3(s, WenoVariant::kZ, cfg.weno_eps);
    case Limiter::kUpwind:
      return 0.0;
  }
  return 0.0;  // unreachable
}

const char* limiter_name(Limiter k);
Limiter limiter_from_name(const std::string& name);

}  // namespace fv3

#endif  // FV3_KERNELS_HPP_
