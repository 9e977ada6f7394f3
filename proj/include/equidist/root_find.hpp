#pragma once

#include <cmath>
#include <functional>

#include "equidist/geometry.hpp"

namespace equidist {

// Bisection on a bracketing interval [a, b] with g(a)*g(b) <= 0, down to the
// requested interval width, followed by one guarded Newton polish when a
// derivative is supplied. This is the root refinement used everywhere in the
// pipeline (brackets come from sign scans on a dense grid).
template <typename F>
double refine_root(F&& g, double a, double b, double width = 1e-10,
                   const std::function<double(double)>& dg = nullptr) {
  double ga = g(a), gb = g(b);
  if (ga == 0.0) return a;
  if (gb == 0.0) return b;
  if (ga * gb > 0.0) fail(Errc::InternalError, "refine_root: interval does not bracket");
  while (b - a > width) {
    const double m = 0.5 * (a + b);
    const double gm = g(m);
    if (gm == 0.0) return m;
    if (ga * gm < 0.0) {
      b = m;
      gb = gm;
    } else {
      a = m;
      ga = gm;
    }
  }
  double r = 0.5 * (a + b);
  if (dg) {
    const double d = dg(r);
    if (std::abs(d) > 1e-9) {
      const double step = g(r) / d;
      const double rn = r - step;
      if (rn > a - (b - a) && rn < b + (b - a)) r = rn;
    }
  }
  return r;
}

// Safeguarded Newton for monotone g on [lo, hi]: keeps a bracket, falls back
// to bisection whenever Newton leaves it or the derivative degenerates.
// Returns the root of g to |g| <= tol_g or bracket width <= tol_x.
template <typename F, typename DF>
double monotone_solve(F&& g, DF&& dg, double lo, double hi, double guess,
                      double tol_x = 1e-13, int max_iter = 80) {
  double glo = g(lo), ghi = g(hi);
  if (glo == 0.0) return lo;
  if (ghi == 0.0) return hi;
  if (glo * ghi > 0.0) {
    // endpoint rounding can leave a tiny one-signed residual
    if (std::abs(glo) < 1e-9 || std::abs(ghi) < 1e-9)
      return std::abs(glo) < std::abs(ghi) ? lo : hi;
    fail(Errc::ContinuationStall, "monotone_solve: no bracket");
  }
  double x = (guess > lo && guess < hi) ? guess : 0.5 * (lo + hi);
  for (int it = 0; it < max_iter; ++it) {
    const double gx = g(x);
    if (gx == 0.0) return x;
    if (glo * gx < 0.0) {
      hi = x;
      ghi = gx;
    } else {
      lo = x;
      glo = gx;
    }
    if (hi - lo <= tol_x) return 0.5 * (lo + hi);
    const double d = dg(x);
    double xn = (std::abs(d) > 1e-14) ? x - gx / d : 0.5 * (lo + hi);
    if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
    x = xn;
  }
  return 0.5 * (lo + hi);
}

}  // namespace equidist
