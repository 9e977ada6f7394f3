#include "equidist/parallel.hpp"

#include <algorithm>
#include <cmath>

#include "equidist/root_find.hpp"

namespace equidist {

namespace {

constexpr double kPointCollisionTol = 1e-9;

// All transversal solutions of theta(t) = L on [0, 2pi), from sign changes on
// the sample grid; solutions within guard_dist of guard_t are dropped (the
// tangential contact of an extremum with its own level).
void level_crossings(const AngleFunction& af, double L, std::vector<double>* out,
                     double guard_t = -1.0, double guard_dist = 1e-5) {
  const std::vector<double>& th = af.theta_samples();
  const int n = static_cast<int>(th.size());
  const double closing = th[0] + kTwoPi * af.rotation();
  auto sample = [&](int i) { return i < n ? th[i] : closing; };
  for (int i = 0; i < n; ++i) {
    const double a = sample(i) - L, b = sample(i + 1) - L;
    if (a == 0.0) {
      double t = kTwoPi * i / n;
      if (guard_t < 0 || std::abs(wrap_pi(t - guard_t)) > guard_dist) out->push_back(t);
      continue;
    }
    if (a * b < 0.0) {
      const double t0 = kTwoPi * i / n, t1 = kTwoPi * (i + 1) / n;
      double r = refine_root([&](double t) { return af.theta_at(t) - L; }, t0, t1, 1e-12,
                             [&](double t) { return af.dtheta_at(t); });
      r = wrap_two_pi(r);
      if (guard_t < 0 || std::abs(wrap_pi(r - guard_t)) > guard_dist) out->push_back(r);
    }
  }
}

}  // namespace

double ParallelStructure::point_param(int k) const {
  const int n = point_count();
  const int wraps = (k >= 0) ? k / n : -((-k - 1) / n + 1);
  const int idx = k - wraps * n;
  return points[idx].t + wraps * kTwoPi;
}

ParallelStructure parallel_points(const AngleFunction& angle) {
  ParallelStructure S(angle);

  // The extremal directions, or the base direction when there are none.
  // Representatives are absolute line directions in [0, pi); the cyclic
  // order of directions does not depend on the chart.
  struct Val {
    double rep;
    double extremum_t;  // < 0 when not an extremum
  };
  std::vector<Val> vals;
  if (angle.extrema().empty()) {
    vals.push_back({wrap_half_pi_line(angle.theta_at(angle.origin())), -1.0});
  } else {
    for (const auto& e : angle.extrema()) vals.push_back({wrap_half_pi_line(e.theta), e.t});
    std::sort(vals.begin(), vals.end(), [](const Val& a, const Val& b) { return a.rep < b.rep; });
  }
  for (const auto& v : vals) S.values.push_back(v.rep);

  for (size_t vi = 0; vi < vals.size(); ++vi) {
    std::vector<double> ts;
    const double span_lo = *std::min_element(angle.theta_samples().begin(),
                                             angle.theta_samples().end());
    const double span_hi = std::max(*std::max_element(angle.theta_samples().begin(),
                                                      angle.theta_samples().end()),
                                    angle.theta_samples()[0] + kTwoPi * angle.rotation());
    const int k_lo = static_cast<int>(std::floor((span_lo - vals[vi].rep) / kPi)) - 1;
    const int k_hi = static_cast<int>(std::ceil((span_hi - vals[vi].rep) / kPi)) + 1;
    for (int k = k_lo; k <= k_hi; ++k)
      level_crossings(angle, vals[vi].rep + k * kPi, &ts, vals[vi].extremum_t);
    if (vals[vi].extremum_t >= 0.0) ts.push_back(vals[vi].extremum_t);
    for (double t : ts) {
      ParallelPoint p;
      p.t = t;
      p.theta = angle.theta_at(t);
      p.value_index = static_cast<int>(vi);
      p.level_index = static_cast<int>(std::round((p.theta - vals[vi].rep) / kPi));
      p.is_inflexion = std::abs(wrap_pi(t - vals[vi].extremum_t)) < 1e-8 && vals[vi].extremum_t >= 0;
      S.points.push_back(p);
    }
  }

  std::sort(S.points.begin(), S.points.end(),
            [](const ParallelPoint& a, const ParallelPoint& b) { return a.t < b.t; });
  for (size_t i = 0; i < S.points.size(); ++i) {
    const double gap = (i + 1 < S.points.size())
                           ? S.points[i + 1].t - S.points[i].t
                           : S.points[0].t + kTwoPi - S.points[i].t;
    if (gap < kPointCollisionTol)
      fail(Errc::TangentCoincidence, "two parallel points collide at t=" +
                                         std::to_string(S.points[i].t));
  }
  if (S.points.size() % 2 != 0)
    fail(Errc::InternalError,
         "odd number of parallel points: " + std::to_string(S.points.size()));
  return S;
}

void parallel_arc_sets(ParallelStructure& S) {
  const int n = S.point_count();
  const int nv = static_cast<int>(S.values.size());
  auto ccw_gap = [&](int i) {
    const double a = S.values[i], b = S.values[(i + 1) % nv];
    double g = b - a;
    if (g <= 0) g += kPi;
    return g;
  };

  S.arcs.clear();
  for (int j = 0; j < n; ++j) {
    ParallelArc arc;
    arc.lo = j;
    arc.hi = (j + 1) % n;
    arc.t_lo = S.points[j].t;
    arc.t_hi = (j + 1 < n) ? S.points[j + 1].t : S.points[0].t + kTwoPi;
    arc.theta_lo = S.points[j].theta;
    arc.theta_hi = (j + 1 < n) ? S.points[j + 1].theta
                               : S.points[0].theta + kTwoPi * S.angle.rotation();
    arc.forward = arc.theta_hi > arc.theta_lo;
    if (S.angle.extrema().empty()) {
      arc.phi_index = 0;
    } else {
      const int v_start = arc.forward ? S.points[arc.lo].value_index : S.points[arc.hi].value_index;
      const int v_end = arc.forward ? S.points[arc.hi].value_index : S.points[arc.lo].value_index;
      if ((v_start + 1) % nv != v_end % nv && nv > 1)
        fail(Errc::InternalError, "arc spans non-adjacent extremal directions");
      arc.phi_index = v_start;
      if (std::abs(arc.gap() - ccw_gap(v_start)) > 1e-7)
        fail(Errc::InternalError, "arc direction span disagrees with its set");
    }
    S.arcs.push_back(arc);
  }

  const int nsets = S.angle.extrema().empty() ? 1 : nv;
  S.phi_sets.assign(nsets, {});
  for (int j = 0; j < n; ++j) S.phi_sets[S.arcs[j].phi_index].push_back(j);
  for (const auto& set : S.phi_sets)
    if (set.empty()) fail(Errc::InternalError, "empty set of parallel arcs");
}

ParallelStructure build_parallel_structure(const FourierCurve& curve, int samples,
                                           const AnalysisOptions& opts) {
  ParallelStructure S = parallel_points(angle_function(curve, samples, opts));
  parallel_arc_sets(S);
  return S;
}

double solve_on_arc(const ParallelStructure& S, const ParallelArc& arc, double target,
                    double guess, double tol) {
  if (target <= arc.theta_min() + 1e-15) return arc.forward ? arc.t_lo : arc.t_hi;
  if (target >= arc.theta_max() - 1e-15) return arc.forward ? arc.t_hi : arc.t_lo;
  const auto& af = S.angle;
  auto g = [&](double t) { return af.theta_at(t) - target; };
  auto dg = [&](double t) { return af.dtheta_at(t); };
  if (!(guess >= arc.t_lo && guess <= arc.t_hi)) guess = 0.5 * (arc.t_lo + arc.t_hi);
  return monotone_solve(g, dg, arc.t_lo, arc.t_hi, guess, tol);
}

ParallelPairing pair_continuation(const ParallelStructure& S, int arc_a, int arc_b,
                                  const ContinuationControl& ctrl) {
  const ParallelArc& A = S.arcs.at(arc_a);
  const ParallelArc& B = S.arcs.at(arc_b);
  if (arc_a == arc_b) fail(Errc::InvalidInput, "pairing needs two distinct arcs");
  if (A.phi_index != B.phi_index)
    fail(Errc::InvalidInput, "arcs belong to different sets of parallel arcs");

  ParallelPairing P;
  P.arc_a = arc_a;
  P.arc_b = arc_b;
  const double d = A.gap();
  const int steps = std::max(1, static_cast<int>(std::ceil(d / ctrl.max_dpsi)));
  P.nodes.reserve(steps + 1);

  double prev_s = std::numeric_limits<double>::quiet_NaN();
  double prev_t = prev_s;
  for (int j = 0; j <= steps; ++j) {
    const double ell = d * j / steps;
    PairingNode node;
    if (j == 0) {
      node.s = A.forward ? A.t_lo : A.t_hi;
      node.t = B.forward ? B.t_lo : B.t_hi;
    } else if (j == steps) {
      node.s = A.forward ? A.t_hi : A.t_lo;
      node.t = B.forward ? B.t_hi : B.t_lo;
    } else {
      // predictor: first-order step dt = d(theta)/theta'
      const double dl = d / steps;
      double gs = prev_s, gt = prev_t;
      const double ra = S.angle.dtheta_at(wrap_two_pi(prev_s));
      const double rb = S.angle.dtheta_at(wrap_two_pi(prev_t));
      if (std::abs(ra) > 1e-9) gs = prev_s + dl / ra;
      if (std::abs(rb) > 1e-9) gt = prev_t + dl / rb;
      node.s = solve_on_arc(S, A, A.theta_min() + ell, gs, ctrl.solve_tol);
      node.t = solve_on_arc(S, B, B.theta_min() + ell, gt, ctrl.solve_tol);
    }
    node.psi = wrap_half_pi_line(A.theta_min() + ell - S.angle.theta_origin());
    prev_s = node.s;
    prev_t = node.t;
    P.nodes.push_back(node);
  }
  return P;
}

std::vector<double> parallel_partners(const ParallelStructure& S, double t) {
  const auto& af = S.angle;
  const double th = af.theta_at(wrap_two_pi(t));
  const double span_lo = *std::min_element(af.theta_samples().begin(), af.theta_samples().end());
  const double span_hi = std::max(*std::max_element(af.theta_samples().begin(),
                                                    af.theta_samples().end()),
                                  af.theta_samples()[0] + kTwoPi * af.rotation());
  std::vector<double> out;
  const int k_lo = static_cast<int>(std::floor((span_lo - th) / kPi)) - 1;
  const int k_hi = static_cast<int>(std::ceil((span_hi - th) / kPi)) + 1;
  const bool at_inflexion = std::abs(signed_curvature(af.curve(), t)) < 1e-9;
  for (int k = k_lo; k <= k_hi; ++k)
    level_crossings(af, th + k * kPi, &out, at_inflexion ? wrap_two_pi(t) : -1.0);
  out.erase(std::remove_if(out.begin(), out.end(),
                           [&](double u) { return std::abs(wrap_pi(u - t)) < 1e-9; }),
            out.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace equidist
