//! \file test_kernels.cpp
//! \brief Unit tests for the reconstruction kernels, frozen expected values
//!        first, then randomized property checks against independent oracles.

#include "fv3/kernels.hpp"

#include <cmath>

#include "doctest.h"
#include "oracles.hpp"

using namespace fv3;

namespace {
constexpr double kTight = 1e-14;
}

TEST_CASE("h3: frozen values") {
  CHECK(h3({1.0, 1.0}) == doctest::Approx(1.0).epsilon(kTight));
  CHECK(h3({0.0, 0.0}) == 0.0);
  CHECK(h3({1.0, 4.0}) == doctest::Approx(3.0).epsilon(kTight));
}

TEST_CASE("h3l: frozen values") {
  CHECK(h3l({1.0, 1.0}) == doctest::Approx(1.0).epsilon(kTight));
  CHECK(h3l({0.0, 0.0}) == 0.0);
  // Clipped by the 1.5|dp| bound.
  CHECK(h3l({4.0, 1.0}) == doctest::Approx(1.5).epsilon(kTight));
  CHECK(h3l({-1.0, 1.0}) == doctest::Approx(1.0 / 3.0).epsilon(kTight));
}

TEST_CASE("h3l: sign-flip antisymmetry for dp != 0") {
  oracle::Rng rng(20240901);
  for (int it = 0; it < 100000; ++it) {
    const double dm = rng.uniform(-10.0, 10.0);
    double dp = rng.uniform(-10.0, 10.0);
    if (dp == 0.0) dp = 1.0;
    const double lhs = h3l({-dm, -dp});
    const double rhs = -h3l({dm, dp});
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
  }
}

TEST_CASE("h3l: never exceeds the 1.5|dp| bound and vanishes on opposite signs when clipped") {
  oracle::Rng rng(77);
  for (int it = 0; it < 100000; ++it) {
    const double dm = rng.uniform(-5.0, 5.0);
    const double dp = rng.uniform(-5.0, 5.0);
    const double v = h3l({dm, dp});
    CHECK(std::abs(v) <= 1.5 * std::abs(dp) + 1e-15);
    // Output is a limited slope: zero whenever dm and dp have strictly
    // opposite signs and the unlimited slope would overshoot past zero.
    if (dm * dp < 0.0) CHECK(v * dp >= -1e-15);
  }
}

TEST_CASE("h3lc: switch branches") {
  SUBCASE("tau = 0 forces the limited branch") {
    const SwitchParams p = SwitchParams::make(0.0, 0.1);
    CHECK(p.tau == 0.0);
    CHECK(h3lc({4.0, 1.0}, p) == doctest::Approx(1.5).epsilon(kTight));
    CHECK(h3lc({1.0, 4.0}, p) == h3l({1.0, 4.0}));
  }
  SUBCASE("small slopes select the unlimited branch") {
    const SwitchParams p = SwitchParams::make(1.0, 0.1);
    CHECK(p.tau == doctest::Approx(2.5e-4).epsilon(kTight));
    CHECK(h3lc({1e-6, 1e-6}, p) == doctest::Approx(1e-6).epsilon(kTight));
  }
  SUBCASE("large slopes select the limited branch") {
    const SwitchParams p = SwitchParams::make(1.0, 0.1);
    CHECK(h3lc({1.0, 1.0}, p) == doctest::Approx(1.0).epsilon(kTight));
    CHECK(h3lc({4.0, 1.0}, p) == h3l({4.0, 1.0}));
  }
  SUBCASE("exactly one branch boundary in tau") {
    const SlopePair s{0.3, -0.2};
    const double edge = s.dm * s.dm + s.dp * s.dp;
    SwitchParams below, above;
    below.tau = edge * (1.0 - 1e-12);
    above.tau = edge * (1.0 + 1e-12);
    CHECK(h3lc(s, below) == h3l(s));
    CHECK(h3lc(s, above) == h3(s));
  }
}

TEST_CASE("scale_slopes: frozen values and uniform collapse") {
  const WidthTriple mid{1.0, 2.0, 1.0};
  const SlopePair s{1.0, 1.0};
  const SlopePair r = scale_slopes_right(s, mid);
  CHECK(r.dm == doctest::Approx(2.0 / 3.0).epsilon(kTight));
  CHECK(r.dp == doctest::Approx(1.0).epsilon(kTight));
  const SlopePair l = scale_slopes_left(s, mid);
  CHECK(l.dm == doctest::Approx(2.0 / 3.0).epsilon(kTight));
  CHECK(l.dp == doctest::Approx(1.0).epsilon(kTight));

  const SlopePair z = scale_slopes_right({0.0, 0.0}, mid);
  CHECK(z.dm == 0.0);
  CHECK(z.dp == 0.0);

  // Equal widths: bit-identical passthrough (right) and swap (left).
  const WidthTriple eq{0.3, 0.3, 0.3};
  const SlopePair s2{0.1234, -0.77};
  const SlopePair r2 = scale_slopes_right(s2, eq);
  CHECK(r2.dm == s2.dm);
  CHECK(r2.dp == s2.dp);
  const SlopePair l2 = scale_slopes_left(s2, eq);
  CHECK(l2.dm == s2.dp);
  CHECK(l2.dp == s2.dm);
}

TEST_CASE("h3_neq: frozen values and exact uniform collapse") {
  CHECK(h3_neq({1.0, 1.0}, {1.0, 2.0, 1.0}) ==
        doctest::Approx(4.0 / 3.0).epsilon(kTight));
  CHECK(h3_neq({0.0, 0.0}, {0.4, 1.7, 0.2}) == 0.0);

  oracle::Rng rng(5150);
  for (int it = 0; it < 100000; ++it) {
    const double w = rng.uniform(1e-3, 10.0);
    const SlopePair s{rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)};
    // Bit-exact equality, not approximate: the uniform path must be able to
    // share face values with the non-uniform path on equidistant grids.
    CHECK(h3_neq(s, {w, w, w}) == h3(s));
  }
}

TEST_CASE("h3lc_neq: frozen values and collapse") {
  const WidthTriple mid{1.0, 2.0, 1.0};
  SUBCASE("alpha large takes the unlimited branch on scaled slopes") {
    const SwitchParams p = SwitchParams::make(1e6, 1.0);
    CHECK(h3lc_neq({1.0, 1.0}, mid, Side::kRight, p) ==
          doctest::Approx(8.0 / 9.0).epsilon(kTight));
  }
  SUBCASE("alpha = 0 equals h3l of the scaled pair") {
    const SwitchParams p = SwitchParams::make(0.0, 1.0);
    const SlopePair s{-2.0, 1.0};
    const SlopePair scaled = scale_slopes_right(s, mid);
    CHECK(h3lc_neq(s, mid, Side::kRight, p) == h3l(scaled));
    const SlopePair scaled_l = scale_slopes_left(s, mid);
    CHECK(h3lc_neq(s, mid, Side::kLeft, p) == h3l(scaled_l));
  }
  SUBCASE("equal widths reduce to h3lc bit-exactly") {
    const SwitchParams p = SwitchParams::make(2.0, 0.25);
    oracle::Rng rng(99);
    for (int it = 0; it < 1000; ++it) {
      const double w = rng.uniform(0.01, 3.0);
      const SlopePair s{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
      CHECK(h3lc_neq(s, {w, w, w}, Side::kRight, p) == h3lc(s, p));
    }
  }
}

TEST_CASE("weno3: frozen values") {
  CHECK(weno3({1.0, 1.0}, WenoVariant::kJs) == doctest::Approx(1.0).epsilon(kTight));
  CHECK(weno3({1.0, 1.0}, WenoVariant::kZ) == doctest::Approx(1.0).epsilon(kTight));
  CHECK(weno3({0.0, 0.0}, WenoVariant::kJs) == 0.0);
  CHECK(weno3({0.0, 0.0}, WenoVariant::kZ) == 0.0);

  // (1, 0) with JS, eps=1e-6: exact weight evaluation.
  const double eps = 1e-6;
  const double a0 = (1.0 / 3.0) / ((eps + 1.0) * (eps + 1.0));
  const double a1 = (2.0 / 3.0) / (eps * eps);
  const double expected = a0 * 1.0 / (a0 + a1);
  const double v = weno3({1.0, 0.0}, WenoVariant::kJs, eps);
  CHECK(v == doctest::Approx(expected).epsilon(kTight));
  CHECK(v >= 0.0);
  CHECK(v <= 1.0 / 3.0);
}

TEST_CASE("weno3: smooth consistency — equal slopes reproduce the linear scheme") {
  oracle::Rng rng(31337);
  for (int it = 0; it < 100000; ++it) {
    const double d = rng.uniform(-4.0, 4.0);
    CHECK(weno3({d, d}, WenoVariant::kJs) == doctest::Approx(d).epsilon(1e-12));
    CHECK(weno3({d, d}, WenoVariant::kZ) == doctest::Approx(d).epsilon(1e-12));
  }
}

TEST_CASE("cell_average_parabola: frozen values") {
  SUBCASE("constant data") {
    const QuadCoeffs q = cell_average_parabola(0.7, 0.7, 0.7, {0.5, 1.5, 0.25});
    CHECK(q.a == doctest::Approx(0.0).epsilon(kTight));
    CHECK(q.b == doctest::Approx(0.0).epsilon(kTight));
    CHECK(q.c == doctest::Approx(0.7).epsilon(kTight));
  }
  SUBCASE("linear data on uniform widths") {
    // u(x) = 2x sampled as averages on unit cells centered at -1, 0, 1.
    const QuadCoeffs q = cell_average_parabola(-2.0, 0.0, 2.0, {1.0, 1.0, 1.0});
    CHECK(q.a == doctest::Approx(0.0).epsilon(kTight));
    CHECK(q.b == doctest::Approx(2.0).epsilon(kTight));
    CHECK(q.c == doctest::Approx(0.0).epsilon(kTight));
  }
  SUBCASE("spec of the three-cell rebuild") {
    const QuadCoeffs q = cell_average_parabola(0.0, 1.0, 4.0, {1.0, 1.0, 1.0});
    CHECK(q.a == doctest::Approx(1.0).epsilon(kTight));
    CHECK(q.b == doctest::Approx(2.0).epsilon(kTight));
    CHECK(q.c == doctest::Approx(11.0 / 12.0).epsilon(kTight));
  }
}

TEST_CASE("cell_average_parabola: averages reproduce inputs (independent 3x3 oracle)") {
  oracle::Rng rng(424242);
  for (int it = 0; it < 100000; ++it) {
    const double dxm = rng.uniform(0.05, 4.0);
    const double dxi = rng.uniform(0.05, 4.0);
    const double dxp = rng.uniform(0.05, 4.0);
    const double um = rng.uniform(-10.0, 10.0);
    const double ui = rng.uniform(-10.0, 10.0);
    const double up = rng.uniform(-10.0, 10.0);
    const WidthTriple w{dxm, dxi, dxp};
    const QuadCoeffs q = cell_average_parabola(um, ui, up, w);

    // Averages of the closed-form polynomial reproduce the input averages.
    auto avg = [&](double lo, double hi) {
      // Average of a*(x)^2 + b*x + c over [lo,hi] in x - x_i coordinates.
      return q.a * (hi * hi * hi - lo * lo * lo) / (3.0 * (hi - lo)) +
             q.b * (hi + lo) / 2.0 + q.c;
    };
    const double bm = -0.5 * dxi - dxm;  // left cell lower edge (rel. x_i)
    const double b0 = -0.5 * dxi;
    const double b1 = 0.5 * dxi;
    const double bp = 0.5 * dxi + dxp;
    const double scale = std::abs(um) + std::abs(ui) + std::abs(up) + 1.0;
    CHECK(std::abs(avg(bm, b0) - um) <= 1e-10 * scale);
    CHECK(std::abs(avg(b0, b1) - ui) <= 1e-10 * scale);
    CHECK(std::abs(avg(b1, bp) - up) <= 1e-10 * scale);

    // Cross-check coefficients against an independent dense linear solve.
    const Eigen::Vector3d ref = oracle::parabola_from_averages(
        um, ui, up, bm, b0, b1, bp);
    CHECK(std::abs(q.a - ref[0]) <= 1e-8 * (1.0 + std::abs(ref[0])));
    CHECK(std::abs(q.b - ref[1]) <= 1e-8 * (1.0 + std::abs(ref[1])));
    CHECK(std::abs(q.c - ref[2]) <= 1e-8 * (1.0 + std::abs(ref[2])));
  }
}

TEST_CASE("h3_neq is the interface value of the Appendix-B parabola") {
  oracle::Rng rng(777);
  for (int it = 0; it < 100000; ++it) {
    const WidthTriple w{rng.uniform(0.05, 3.0), rng.uniform(0.05, 3.0),
                        rng.uniform(0.05, 3.0)};
    const double um = rng.uniform(-5.0, 5.0);
    const double ui = rng.uniform(-5.0, 5.0);
    const double up = rng.uniform(-5.0, 5.0);
    const QuadCoeffs q = cell_average_parabola(um, ui, up, w);
    auto p_at = [&](double x) { return (q.a * x + q.b) * x + q.c; };

    const SlopePair s{ui - um, up - ui};
    const double scale = std::abs(um) + std::abs(ui) + std::abs(up) + 1.0;

    const double right = ui + 0.5 * h3_neq(s, w);
    CHECK(std::abs(right - p_at(0.5 * w.dxi)) <= 1e-10 * scale);

    // Left interface: swapped slopes and mirrored widths.
    const double left =
        ui - 0.5 * h3_neq({s.dp, s.dm}, {w.dxp, w.dxi, w.dxm});
    CHECK(std::abs(left - p_at(-0.5 * w.dxi)) <= 1e-10 * scale);
  }
}

TEST_CASE("h3 reconstructs exact interface values of quadratics on uniform grids") {
  oracle::Rng rng(2025);
  for (int it = 0; it < 100000; ++it) {
    const oracle::Poly2 poly{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0),
                             rng.uniform(-3.0, 3.0)};
    const double h = rng.uniform(0.01, 2.0);
    const double x0 = rng.uniform(-5.0, 5.0);
    const double um = poly.average(x0 - h, x0);
    const double ui = poly.average(x0, x0 + h);
    const double up = poly.average(x0 + h, x0 + 2.0 * h);
    const double face = ui + 0.5 * h3({ui - um, up - ui});
    const double mag = std::abs(face) + 1.0;
    CHECK(std::abs(face - poly(x0 + h)) <= 1e-12 * mag);
  }
}

TEST_CASE("apply_limiter: dispatch matches the kernels and counts branches") {
  LimiterStats stats;
  LimiterConfig cfg;
  cfg.sw = SwitchParams::make(1.0, 0.1);

  const SlopePair smooth{1e-7, -1e-7};
  const SlopePair rough{2.0, -1.0};

  cfg.kind = Limiter::kH3;
  CHECK(apply_limiter(cfg, rough, &stats) == h3(rough));
  cfg.kind = Limiter::kH3L;
  CHECK(apply_limiter(cfg, rough, &stats) == h3l(rough));
  CHECK(stats.smooth == 0);
  CHECK(stats.limited == 0);  // only the switched kernel counts

  cfg.kind = Limiter::kH3LC;
  CHECK(apply_limiter(cfg, smooth, &stats) == h3(smooth));
  CHECK(apply_limiter(cfg, rough, &stats) == h3l(rough));
  CHECK(stats.smooth == 1);
  CHECK(stats.limited == 1);

  cfg.kind = Limiter::kWeno3Js;
  CHECK(apply_limiter(cfg, rough, nullptr) ==
        weno3(rough, WenoVariant::kJs, cfg.weno_eps));
  cfg.kind = Limiter::kWeno3Z;
  CHECK(apply_limiter(cfg, rough, nullptr) ==
        weno3(rough, WenoVariant::kZ, cfg.weno_eps));
  cfg.kind = Limiter::kUpwind;
  CHECK(apply_limiter(cfg, rough, nullptr) == 0.0);
}

TEST_CASE("limiter names round-trip") {
  for (Limiter k : {Limiter::kH3, Limiter::kH3L, Limiter::kH3LC,
                    Limiter::kWeno3Js, Limiter::kWeno3Z, Limiter::kUpwind}) {
    CHECK(limiter_from_name(limiter_name(k)) == k);
  }
  CHECK_THROWS_AS((void)limiter_from_name("h4"), std::invalid_argument);
}
