#include "equidist/curve_analysis.hpp"

#include <algorithm>
#include <cmath>

#include "equidist/root_find.hpp"

namespace equidist {

namespace {

std::vector<double> curvature_roots(const FourierCurve& curve, const AnalysisOptions& opts,
                                    bool* all_simple) {
  const int n = opts.samples;
  std::vector<double> kap(n + 1);
  for (int i = 0; i <= n; ++i) kap[i] = signed_curvature(curve, kTwoPi * i / n);
  std::vector<double> roots;
  if (all_simple) *all_simple = true;
  for (int i = 0; i < n; ++i) {
    if (kap[i] == 0.0 || kap[i] * kap[i + 1] < 0.0) {
      const double a = kTwoPi * i / n, b = kTwoPi * (i + 1) / n;
      const double r = refine_root([&](double t) { return signed_curvature(curve, t); }, a, b,
                                   opts.root_width,
                                   [&](double t) { return evaluate_jet(curve, t).kappa_prime_t; });
      roots.push_back(wrap_two_pi(r));
      if (all_simple && std::abs(evaluate_jet(curve, r).kappa_prime_t) < opts.simple_root_tol)
        *all_simple = false;
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// Near-zero |kappa| minima that never cross zero (double roots).
bool has_grazing_curvature(const FourierCurve& curve, const AnalysisOptions& opts) {
  const int n = opts.samples;
  std::vector<double> kap(n);
  for (int i = 0; i < n; ++i) kap[i] = signed_curvature(curve, kTwoPi * i / n);
  for (int i = 0; i < n; ++i) {
    const double prev = kap[(i + n - 1) % n], cur = kap[i], next = kap[(i + 1) % n];
    if (std::abs(cur) <= std::abs(prev) && std::abs(cur) <= std::abs(next) &&
        std::abs(cur) < opts.simple_root_tol && prev * next > 0.0) {
      // local minimum of |kappa| close to zero without a sign change
      if (std::abs(evaluate_jet(curve, kTwoPi * i / n).kappa_prime_t) < 10 * opts.simple_root_tol)
        return true;
    }
  }
  return false;
}

}  // namespace

std::vector<InflexionPoint> inflexion_points(const FourierCurve& curve,
                                             const AnalysisOptions& opts) {
  bool all_simple = true;
  const std::vector<double> roots = curvature_roots(curve, opts, &all_simple);
  if (!all_simple)
    fail(Errc::DegenerateInflexion, "curvature has a non-simple root");
  if (roots.size() % 2 != 0)
    fail(Errc::InternalError, "odd number of curvature sign changes");
  std::vector<InflexionPoint> out;
  out.reserve(roots.size());
  for (double r : roots) {
    InflexionPoint p;
    p.t = r;
    const Jet j = evaluate_jet(curve, r);
    p.position = j.f;
    p.kappa_prime_sign = j.kappa_prime_t > 0 ? 1 : -1;
    p.contact_order = 2;
    out.push_back(p);
  }
  return out;
}

int rotation_number(const FourierCurve& curve, const AnalysisOptions& opts) {
  const int n = opts.samples;
  double lift = 0.0;
  double prev = evaluate_jet(curve, 0.0).theta_raw;
  for (int i = 1; i <= n; ++i) {
    const double raw = evaluate_jet(curve, kTwoPi * i / n).theta_raw;
    lift += wrap_pi(raw - prev);
    prev = raw;
  }
  const double turns = lift / kTwoPi;
  const double rounded = std::round(turns);
  if (std::abs(turns - rounded) > 0.01)
    fail(Errc::LiftInconsistent,
         "tangent winding is not an integer: " + std::to_string(turns));
  return static_cast<int>(rounded);
}

GenericityReport genericity_check(const FourierCurve& curve, const AnalysisOptions& opts) {
  GenericityReport rep;
  rep.min_speed = curve.min_speed();
  rep.regular = rep.min_speed > FourierCurve::kRegularityEps;

  bool all_simple = true;
  const std::vector<double> roots = curvature_roots(curve, opts, &all_simple);
  if (!all_simple || roots.size() % 2 != 0) {
    rep.degenerate_inflexion = true;
    rep.notes.push_back("non-simple curvature root");
  }
  if (has_grazing_curvature(curve, opts)) {
    rep.degenerate_inflexion = true;
    rep.notes.push_back("curvature grazes zero without sign change");
  }

  // Extrema of the angle function sit at the inflexions; phi'' there is
  // kappa' |f'|, so the simplicity test above doubles as the extremum
  // non-degeneracy test. Flag separately with the documented tolerance.
  for (double r : roots) {
    const Jet j = evaluate_jet(curve, r);
    if (std::abs(j.kappa_prime_t * j.speed) < opts.simple_root_tol) {
      rep.extremum_degenerate = true;
      rep.notes.push_back("angle-function extremum is degenerate at t=" + std::to_string(r));
    }
  }

  // Two inflexion tangents parallel mod pi.
  for (size_t i = 0; i < roots.size(); ++i)
    for (size_t j = i + 1; j < roots.size(); ++j) {
      const double a = evaluate_jet(curve, roots[i]).theta_raw;
      const double b = evaluate_jet(curve, roots[j]).theta_raw;
      if (std::abs(line_angle_diff(a, b)) < opts.angle_coincidence_tol) {
        rep.tangent_coincidence = true;
        rep.notes.push_back("parallel inflexion tangents");
      }
    }

  // Central symmetry makes kappa equal at every parallel pair, which
  // degenerates the Wigner caustic (it collapses to the centre). A curve is
  // centrally symmetric exactly when all even harmonics k >= 2 vanish.
  double even_mass = 0.0, total_mass = 0.0;
  for (int k = 1; k <= curve.degree(); ++k) {
    const double m = std::abs(curve.xc()[k]) + std::abs(curve.xs()[k]) +
                     std::abs(curve.yc()[k]) + std::abs(curve.ys()[k]);
    total_mass += m;
    if (k % 2 == 0) even_mass += m;
  }
  if (total_mass > 0 && even_mass < 1e-12 * total_mass) {
    rep.centrally_symmetric = true;
    rep.notes.push_back("centrally symmetric: kappa(a)/kappa(b) == 1 at every parallel pair");
  }
  return rep;
}

std::vector<SelfIntersection> self_intersections(const FourierCurve& curve, int samples) {
  std::vector<Vec2> pts(samples);
  for (int i = 0; i < samples; ++i) pts[i] = curve.position(kTwoPi * i / samples);
  auto seg = [&](int i, int k) { return pts[(i + k) % samples]; };

  std::vector<SelfIntersection> out;
  for (int i = 0; i < samples; ++i) {
    for (int j = i + 2; j < samples; ++j) {
      if (i == 0 && j == samples - 1) continue;  // adjacent across the seam
      const Vec2 p = seg(i, 0), r = seg(i, 1) - p;
      const Vec2 q = seg(j, 0), s = seg(j, 1) - q;
      const double denom = cross2(r, s);
      if (std::abs(denom) < 1e-14) continue;
      const double u = cross2(q - p, s) / denom;
      const double v = cross2(q - p, r) / denom;
      if (u < 0.0 || u >= 1.0 || v < 0.0 || v >= 1.0) continue;
      double t1 = kTwoPi * (i + u) / samples;
      double t2 = kTwoPi * (j + v) / samples;
      // Newton on f(t1) - f(t2) = 0
      for (int it = 0; it < 30; ++it) {
        const Vec2 d = curve.position(t1) - curve.position(t2);
        if (d.norm() < 1e-13) break;
        Eigen::Matrix2d J;
        J.col(0) = curve.derivative(t1, 1);
        J.col(1) = -curve.derivative(t2, 1);
        const Vec2 step = J.colPivHouseholderQr().solve(-d);
        t1 += step[0];
        t2 += step[1];
      }
      t1 = wrap_two_pi(t1);
      t2 = wrap_two_pi(t2);
      if (t2 < t1) std::swap(t1, t2);
      const bool dup = std::any_of(out.begin(), out.end(), [&](const SelfIntersection& e) {
        return std::abs(e.t1 - t1) < 1e-6 && std::abs(e.t2 - t2) < 1e-6;
      });
      if (!dup && (curve.position(t1) - curve.position(t2)).norm() < 1e-9) {
        SelfIntersection si;
        si.t1 = t1;
        si.t2 = t2;
        si.position = curve.position(t1);
        out.push_back(si);
      }
    }
  }
  return out;
}

}  // namespace equidist
