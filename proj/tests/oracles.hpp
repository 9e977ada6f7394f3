#pragma once

// Test-only oracles, independent of the library's solvers: finite
// differences for derivatives, dense scans for roots and margins.

#include <cmath>
#include <vector>

#include "equidist/fourier_curve.hpp"

namespace oracles {

using equidist::FourierCurve;
using equidist::kTwoPi;
using equidist::Vec2;

// central finite difference of the position, order 1 or 2
inline Vec2 fd_derivative(const FourierCurve& c, double t, int order, double h = 1e-5) {
  if (order == 1) return (c.position(t + h) - c.position(t - h)) / (2 * h);
  if (order == 2) return (c.position(t + h) - 2 * c.position(t) + c.position(t - h)) / (h * h);
  throw std::runtime_error("fd_derivative supports order 1 and 2");
}

inline double fd_curvature(const FourierCurve& c, double t, double h = 1e-5) {
  const Vec2 d1 = fd_derivative(c, t, 1, h);
  const Vec2 d2 = fd_derivative(c, t, 2, h);
  const double sp = d1.norm();
  return (d1.x() * d2.y() - d1.y() * d2.x()) / (sp * sp * sp);
}

// dense scan: parameters bracketing curvature sign changes
inline std::vector<std::pair<double, double>> curvature_sign_changes(const FourierCurve& c,
                                                                     int n = 1 << 14) {
  std::vector<std::pair<double, double>> out;
  double prev = equidist::signed_curvature(c, 0.0);
  for (int i = 1; i <= n; ++i) {
    const double t = kTwoPi * i / n;
    const double k = equidist::signed_curvature(c, t);
    if (prev * k < 0.0) out.emplace_back(kTwoPi * (i - 1) / n, t);
    prev = k;
  }
  return out;
}

// Brute-force Wigner margin scan on a convex curve: builds its own tangent
// lift by unwrapping atan2 samples, pairs antipodal lift levels by linear
// interpolation and counts sign changes of kappa(s) - kappa(partner(s)).
inline int convex_wigner_cusp_scan(const FourierCurve& c, int n = 1 << 16) {
  // table over two periods so every queried level stays in range
  const int m = 2 * n;
  std::vector<double> lift(m + 1), kap(m + 1);
  double prev = 0.0;
  for (int i = 0; i <= m; ++i) {
    const double t = kTwoPi * i / n;
    const Vec2 d1 = c.derivative(t, 1);
    const double raw = std::atan2(d1.y(), d1.x());
    if (i == 0) {
      lift[0] = raw;
    } else {
      double d = raw - prev;
      while (d > M_PI) d -= 2 * M_PI;
      while (d < -M_PI) d += 2 * M_PI;
      lift[i] = lift[i - 1] + d;
    }
    prev = raw;
    kap[i] = equidist::signed_curvature(c, t);
  }
  auto kappa_at_lift = [&](double level) {
    // lift is strictly increasing on a convex curve
    int lo = 0, hi = m;
    while (hi - lo > 1) {
      const int mid = (lo + hi) / 2;
      (lift[mid] <= level ? lo : hi) = mid;
    }
    const double w = (level - lift[lo]) / (lift[lo + 1] - lift[lo]);
    return kap[lo] + w * (kap[lo + 1] - kap[lo]);
  };
  int changes = 0;
  double prev_m = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double mgn = kap[i] - kappa_at_lift(lift[i] + M_PI);
    if (i > 0 && mgn * prev_m < 0.0) ++changes;
    prev_m = mgn;
  }
  // the full loop covers every unordered pair twice
  return changes / 2;
}

}  // namespace oracles
