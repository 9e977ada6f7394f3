#include "equidist/equidistant.hpp"

#include <algorithm>
#include <cmath>

namespace equidist {

namespace {

int parity_mod2(double theta_a, double theta_b) {
  const long long k = std::llround((theta_b - theta_a) / kPi);
  return static_cast<int>(((k % 2) + 2) % 2);
}

// Geometry of one scheme step: both rows sweep the same tangent-direction
// interval; x below is the distance traveled from the step's start.
struct StepFrame {
  const ParallelStructure* S = nullptr;
  SchemeStep step;
  double gap = 0.0;

  double theta_target_top(double x) const {
    const ParallelArc& A = S->arcs[step.arc_top];
    return step.from_paper_start ? A.theta_min() + x : A.theta_max() - x;
  }
  double theta_target_bottom(double x) const {
    const ParallelArc& B = S->arcs[step.arc_bottom];
    return step.from_paper_start ? B.theta_min() + x : B.theta_max() - x;
  }
  double solve_top(double x, double guess, double tol) const {
    return solve_on_arc(*S, S->arcs[step.arc_top], theta_target_top(x), guess, tol);
  }
  double solve_bottom(double x, double guess, double tol) const {
    return solve_on_arc(*S, S->arcs[step.arc_bottom], theta_target_bottom(x), guess, tol);
  }
};

StepFrame make_frame(const ParallelStructure& S, const GluingScheme& scheme, int i) {
  StepFrame fr;
  fr.S = &S;
  fr.step = derive_step(S, scheme.pairs[i], scheme.pairs[i + 1]);
  fr.gap = S.arcs[fr.step.arc_top].gap();
  return fr;
}

struct PairSample {
  double s_raw = 0.0, t_raw = 0.0;
  Jet ja, jb;
  double kappa_b_conv = 0.0;
};

PairSample sample_pair(const ParallelStructure& S, const StepFrame& fr, double x, double gs,
                       double gt, bool parity_odd, double tol) {
  PairSample ps;
  ps.s_raw = fr.solve_top(x, gs, tol);
  ps.t_raw = fr.solve_bottom(x, gt, tol);
  ps.ja = evaluate_jet(S.curve(), wrap_two_pi(ps.s_raw));
  ps.jb = evaluate_jet(S.curve(), wrap_two_pi(ps.t_raw));
  ps.kappa_b_conv = parity_odd ? ps.jb.kappa : -ps.jb.kappa;
  return ps;
}

double margin_of(const PairSample& ps, double lambda) {
  return (1.0 - lambda) * ps.ja.kappa - lambda * ps.kappa_b_conv;
}

double kappa_e_formula(double kappa_a, double kappa_b_conv, double lambda) {
  const double denom = std::abs(lambda * kappa_b_conv - (1.0 - lambda) * kappa_a);
  return kappa_a * std::abs(kappa_b_conv) / denom;
}

}  // namespace

double Branch::diameter() const {
  if (nodes.empty()) return 0.0;
  Vec2 lo = nodes.front().pos, hi = lo;
  for (const auto& n : nodes) {
    lo = lo.cwiseMin(n.pos);
    hi = hi.cwiseMax(n.pos);
  }
  return (hi - lo).norm();
}

Branch trace_branch(const ParallelStructure& S, const GluingScheme& scheme, double lambda,
                    const TraceControl& ctrl) {
  if (lambda == 0.0 || lambda == 1.0)
    fail(Errc::InvalidInput, "lambda in {0,1} reproduces the curve itself");
  if (scheme.lambda_class == LambdaClass::Half && lambda != 0.5)
    fail(Errc::InvalidInput, "half-class scheme requires lambda = 1/2 exactly");
  if (scheme.lambda_class == LambdaClass::Generic && lambda == 0.5)
    fail(Errc::InvalidInput, "lambda = 1/2 uses the half-class schemes");

  Branch br;
  br.lambda = lambda;
  br.scheme = scheme;
  br.closed = scheme.closed;
  br.on_shell = scheme.on_shell;

  const auto& [k0, l0] = scheme.pairs.front();
  const double theta_a0 = S.points[k0].theta;
  const double theta_b0 = S.points[l0].theta;
  br.parity_odd = parity_mod2(theta_a0, theta_b0) == 1;

  double cum_a = theta_a0;
  for (int i = 0; i < scheme.step_count(); ++i) {
    const StepFrame fr = make_frame(S, scheme, i);
    const int steps = std::max(1, static_cast<int>(std::ceil(fr.gap / ctrl.max_dpsi)));
    const double offset_a = cum_a - fr.theta_target_top(0.0);
    double gs = std::numeric_limits<double>::quiet_NaN(), gt = gs;
    for (int j = (i == 0 ? 0 : 1); j <= steps; ++j) {
      const double x = fr.gap * j / steps;
      const PairSample ps = sample_pair(S, fr, x, gs, gt, br.parity_odd, ctrl.solve_tol);
      gs = ps.s_raw;
      gt = ps.t_raw;
      BranchNode node;
      node.s = wrap_two_pi(ps.s_raw);
      node.t = wrap_two_pi(ps.t_raw);
      node.pos = lambda * ps.ja.f + (1.0 - lambda) * ps.jb.f;
      node.theta_a = fr.theta_target_top(x) + offset_a;
      node.psi = wrap_half_pi_line(node.theta_a - S.angle.theta_origin());
      node.kappa_a = ps.ja.kappa;
      node.kappa_b = ps.kappa_b_conv;
      node.margin = margin_of(ps, lambda);
      node.kappa_e = kappa_e_formula(node.kappa_a, node.kappa_b, lambda);
      node.step = i;
      node.ell = x;
      if (j == 0 || j == steps) node.pair_index = (j == 0) ? i : i + 1;
      br.nodes.push_back(node);
    }
    cum_a = br.nodes.back().theta_a;
  }

  if (br.diameter() < 1e-9) br.degenerate_point = true;
  return br;
}

void detect_cusps(const ParallelStructure& S, Branch& br, const TraceControl& ctrl) {
  br.cusps.clear();
  if (br.degenerate_point || br.nodes.size() < 3) return;

  double scale = 0.0;
  for (const auto& n : br.nodes) scale = std::max(scale, std::abs(n.margin));
  if (scale < 1e-12) {
    if (br.diameter() < 1e-9) {
      br.degenerate_point = true;
      return;
    }
    fail(Errc::TangentialRoot, "margin vanishes identically; lambda is not generic");
  }

  const int n = static_cast<int>(br.nodes.size());
  const int first = br.on_shell ? 1 : 0;
  const int last = br.on_shell ? n - 2 : n - 1;

  // grazing zeros (no sign change) mean a non-generic lambda
  for (int i = std::max(first, 1) ; i <= std::min(last, n - 2); ++i) {
    const double m0 = br.nodes[i - 1].margin, m1 = br.nodes[i].margin,
                 m2 = br.nodes[i + 1].margin;
    if (std::abs(m1) <= std::abs(m0) && std::abs(m1) <= std::abs(m2) && m0 * m2 > 0.0 &&
        std::abs(m1) < 1e-8 * scale && m1 * m0 >= 0.0)
      fail(Errc::TangentialRoot, "margin grazes zero without sign change");
  }

  struct Found {
    int step;
    double ell;
    Cusp cusp;
  };
  std::vector<Found> found;
  for (int i = first; i < last; ++i) {
    const BranchNode& a = br.nodes[i];
    const BranchNode& b = br.nodes[i + 1];
    if (!(a.margin * b.margin < 0.0)) continue;
    // bracket lives inside b's step (a may be the shared boundary node)
    const int step_idx = b.step;
    const StepFrame fr = make_frame(S, br.scheme, step_idx);
    double x0 = (a.step == step_idx) ? a.ell : 0.0;
    double x1 = b.ell;
    double guess = 0.5 * (a.s + b.s);
    double m0 = a.margin;
    double sa = fr.solve_top(x0, guess, ctrl.solve_tol);
    double sb = fr.solve_top(x1, guess, ctrl.solve_tol);
    PairSample ps_mid = sample_pair(S, fr, 0.5 * (x0 + x1), guess, a.t, br.parity_odd,
                                    ctrl.solve_tol);
    for (int it = 0; it < 100 && std::abs(sb - sa) > ctrl.cusp_param_width; ++it) {
      const double xm = 0.5 * (x0 + x1);
      const PairSample ps =
          sample_pair(S, fr, xm, ps_mid.s_raw, ps_mid.t_raw, br.parity_odd, ctrl.solve_tol);
      ps_mid = ps;
      const double mm = margin_of(ps, br.lambda);
      if (mm == 0.0) break;
      if (mm * m0 < 0.0) {
        x1 = xm;
        sb = ps.s_raw;
      } else {
        x0 = xm;
        sa = ps.s_raw;
        m0 = mm;
      }
    }
    Found f;
    f.step = step_idx;
    f.ell = 0.5 * (x0 + x1);
    f.cusp.s = wrap_two_pi(ps_mid.s_raw);
    f.cusp.t = wrap_two_pi(ps_mid.t_raw);
    f.cusp.pos = br.lambda * ps_mid.ja.f + (1.0 - br.lambda) * ps_mid.jb.f;
    found.push_back(f);
  }

  // splice duplicated cusp nodes into the polyline so renderers see the corner
  std::vector<BranchNode> merged;
  merged.reserve(br.nodes.size() + 2 * found.size());
  size_t fi = 0;
  auto before = [](const BranchNode& n, const Found& f) {
    return n.step < f.step || (n.step == f.step && n.ell < f.ell);
  };
  for (const auto& node : br.nodes) {
    while (fi < found.size() && !before(node, found[fi])) {
      BranchNode cn;
      cn.s = found[fi].cusp.s;
      cn.t = found[fi].cusp.t;
      cn.pos = found[fi].cusp.pos;
      const Jet ja = evaluate_jet(S.curve(), cn.s);
      const Jet jb = evaluate_jet(S.curve(), cn.t);
      cn.kappa_a = ja.kappa;
      cn.kappa_b = br.parity_odd ? jb.kappa : -jb.kappa;
      cn.margin = (1.0 - br.lambda) * cn.kappa_a - br.lambda * cn.kappa_b;
      cn.kappa_e = kappa_e_formula(cn.kappa_a, cn.kappa_b, br.lambda);
      cn.step = found[fi].step;
      cn.ell = found[fi].ell;
      cn.is_cusp = true;
      const StepFrame fr = make_frame(S, br.scheme, found[fi].step);
      cn.theta_a = 0.0;
      cn.psi = wrap_half_pi_line(fr.theta_target_top(found[fi].ell) - S.angle.theta_origin());
      merged.push_back(cn);
      merged.push_back(cn);
      br.cusps.push_back(found[fi].cusp);
      ++fi;
    }
    merged.push_back(node);
  }
  while (fi < found.size()) {
    br.cusps.push_back(found[fi].cusp);
    ++fi;
  }
  br.nodes = std::move(merged);
}

void detect_inflexions(const ParallelStructure& S, Branch& br) {
  br.inflexions.clear();
  const int q = static_cast<int>(br.scheme.pairs.size());
  for (size_t i = 0; i < br.nodes.size(); ++i) {
    BranchNode& node = br.nodes[i];
    node.is_inflexion = false;
    if (node.pair_index < 0) continue;
    if (br.closed && node.pair_index == q - 1) continue;  // duplicate of pair 0
    if (br.on_shell && br.scheme.lambda_class == LambdaClass::Half &&
        (node.pair_index == 0 || node.pair_index == q - 1))
      continue;  // curve points, excluded
    const auto& [k, l] = br.scheme.pairs[node.pair_index];
    if (S.points[k].is_inflexion || S.points[l].is_inflexion) {
      node.is_inflexion = true;
      BranchInflexion bi;
      bi.s = node.s;
      bi.t = node.t;
      bi.pos = node.pos;
      bi.node = static_cast<int>(i);
      br.inflexions.push_back(bi);
    }
  }
}

double branch_curvature(const BranchNode& node, double lambda) {
  const double denom = std::abs(lambda * node.kappa_b - (1.0 - lambda) * node.kappa_a);
  if (denom < 1e-12) fail(Errc::AtCusp, "curvature undefined at a singular point");
  return node.kappa_a * std::abs(node.kappa_b) / denom;
}

int branch_rotation_twice(const Branch& br) {
  if (!br.closed) fail(Errc::InvalidInput, "rotation number needs a closed branch");
  double theta_first = 0.0, theta_last = 0.0;
  bool have_first = false;
  for (const auto& n : br.nodes) {
    if (n.is_cusp) continue;  // cusp nodes carry no cumulative lift
    if (!have_first) {
      theta_first = n.theta_a;
      have_first = true;
    }
    theta_last = n.theta_a;
  }
  const double halves = (theta_last - theta_first) / kPi;
  if (std::abs(halves - std::round(halves)) > 0.02)
    fail(Errc::LiftInconsistent, "branch winding is not a half-integer");
  return static_cast<int>(std::round(halves));
}

std::vector<Branch> full_equidistant(const ParallelStructure& S, double lambda,
                                     const TraceControl& ctrl) {
  std::vector<Branch> out;
  if (lambda == 0.0 || lambda == 1.0) {
    // E_0 = E_1 = the curve itself
    Branch br;
    br.lambda = lambda;
    br.closed = true;
    const int n = 1024;
    for (int i = 0; i <= n; ++i) {
      const double t = kTwoPi * i / n;
      BranchNode node;
      node.s = node.t = wrap_two_pi(t);
      const Jet j = evaluate_jet(S.curve(), node.s);
      node.pos = j.f;
      node.kappa_a = node.kappa_e = j.kappa;
      node.theta_a = S.angle.theta_at(t);
      node.psi = wrap_half_pi_line(node.theta_a - S.angle.theta_origin());
      br.nodes.push_back(node);
    }
    br.rotation_twice = 2 * S.angle.rotation();
    out.push_back(std::move(br));
    return out;
  }
  const LambdaClass cls = (lambda == 0.5) ? LambdaClass::Half : LambdaClass::Generic;
  for (const GluingScheme& scheme : maximal_schemes(S, cls)) {
    Branch br = trace_branch(S, scheme, lambda, ctrl);
    detect_cusps(S, br, ctrl);
    detect_inflexions(S, br);
    if (br.closed && !br.degenerate_point) br.rotation_twice = branch_rotation_twice(br);
    out.push_back(std::move(br));
  }
  return out;
}

double node_tangent_direction_fd(const ParallelStructure& S, const Branch& br, int node_index,
                                 double h) {
  const BranchNode& node = br.nodes.at(node_index);
  const StepFrame fr = make_frame(S, br.scheme, node.step);
  const double x0 = std::max(0.0, node.ell - h);
  const double x1 = std::min(fr.gap, node.ell + h);
  const double tol = 1e-14;
  const PairSample a = sample_pair(S, fr, x0, node.s, node.t, br.parity_odd, tol);
  const PairSample b = sample_pair(S, fr, x1, node.s, node.t, br.parity_odd, tol);
  const Vec2 pa = br.lambda * a.ja.f + (1.0 - br.lambda) * a.jb.f;
  const Vec2 pb = br.lambda * b.ja.f + (1.0 - br.lambda) * b.jb.f;
  return std::atan2(pb.y() - pa.y(), pb.x() - pa.x());
}

double node_curvature_fd(const ParallelStructure& S, const Branch& br, int node_index, double h) {
  const BranchNode& node = br.nodes.at(node_index);
  const StepFrame fr = make_frame(S, br.scheme, node.step);
  if (node.ell - h < 0.0 || node.ell + h > fr.gap) return std::numeric_limits<double>::quiet_NaN();
  const double tol = 1e-14;
  const PairSample a = sample_pair(S, fr, node.ell - h, node.s, node.t, br.parity_odd, tol);
  const PairSample c = sample_pair(S, fr, node.ell + h, node.s, node.t, br.parity_odd, tol);
  const Vec2 p1 = br.lambda * a.ja.f + (1.0 - br.lambda) * a.jb.f;
  const Vec2 p2 = node.pos;
  const Vec2 p3 = br.lambda * c.ja.f + (1.0 - br.lambda) * c.jb.f;
  const double area2 = cross2(p2 - p1, p3 - p1);
  const double d12 = (p2 - p1).norm(), d23 = (p3 - p2).norm(), d13 = (p3 - p1).norm();
  return std::abs(2.0 * area2 / (d12 * d23 * d13));
}

CssCurve css_curve(const ParallelStructure& S, const TraceControl& ctrl) {
  CssCurve css;
  constexpr double kPoleTol = 1e-8;
  const auto schemes = maximal_schemes(S, LambdaClass::Half);
  Vec2 lo(1e300, 1e300), hi(-1e300, -1e300);
  for (const GluingScheme& scheme : schemes) {
    Branch br = trace_branch(S, scheme, 0.5, ctrl);
    std::vector<CssNode> seg;
    auto flush = [&]() {
      if (seg.size() >= 2) css.segments.push_back(seg);
      seg.clear();
    };
    for (const auto& node : br.nodes) {
      const Jet ja = evaluate_jet(S.curve(), node.s);
      const Jet jb = evaluate_jet(S.curve(), node.t);
      const double ka = node.kappa_a, kb = node.kappa_b;
      const bool endpoint_pair =
          node.pair_index >= 0 &&
          scheme.pairs[node.pair_index].first == scheme.pairs[node.pair_index].second;
      if (endpoint_pair) {
        css.endpoint_markers.push_back(ja.f);
        flush();
        continue;
      }
      if (std::abs(ka + kb) < kPoleTol) {
        flush();
        continue;
      }
      CssNode cn;
      cn.s = node.s;
      cn.t = node.t;
      cn.q = (ka * ja.f + kb * jb.f) / (ka + kb);
      const Vec2 chord = ja.f - jb.f;
      const double len = chord.norm();
      cn.chord_dir = len > 1e-12 ? Vec2(chord / len) : Vec2(std::cos(node.psi), std::sin(node.psi));
      const double kpa = ja.kappa_prime_s();
      const double kpb = jb.kappa_prime_s();
      const double denom = std::abs(kb * kb * kpa - ka * ka * kpb);
      if (denom > 1e-14 && len > 1e-12) {
        const double sum = ka + kb;
        cn.kappa_css = (kb > 0 ? 1.0 : -1.0) * sum * sum * sum / denom *
                       cross2(ja.f - jb.f, ja.unit_tangent()) / (len * len * len);
      } else {
        cn.near_pole = true;
      }
      lo = lo.cwiseMin(cn.q);
      hi = hi.cwiseMax(cn.q);
      seg.push_back(cn);
    }
    flush();
  }
  if (!css.segments.empty() && (hi - lo).norm() < 1e-6) css.degenerate_point = true;
  return css;
}

int css_cusp_count(const CssCurve& css) {
  if (css.degenerate_point) return 0;
  int count = 0;
  for (const auto& seg : css.segments) {
    const int n = static_cast<int>(seg.size());
    if (n < 3) continue;
    const bool closed = (seg.front().q - seg.back().q).norm() < 1e-7;
    std::vector<double> u;
    const int m = closed ? n - 1 : n - 1;
    for (int i = 0; i < m; ++i) u.push_back((seg[i + 1].q - seg[i].q).dot(seg[i].chord_dir));
    const int lim = closed ? static_cast<int>(u.size()) : static_cast<int>(u.size()) - 1;
    for (int i = 0; i < lim; ++i) {
      const double a = u[i], b = u[(i + 1) % u.size()];
      if (a * b < 0.0) ++count;
    }
  }
  return count;
}

EndpointClassification classify_onshell_endpoint(const ParallelStructure& S, double inflexion_t,
                                                 ArcSide side) {
  const int n = S.point_count();
  int k = -1;
  for (int i = 0; i < n; ++i)
    if (S.points[i].is_inflexion && std::abs(wrap_pi(S.points[i].t - inflexion_t)) < 1e-6) k = i;
  if (k < 0) fail(Errc::InvalidInput, "parameter is not an inflexion of the parallel sequence");
  const double t0 = S.points[k].t;
  const auto [arc_prev_idx, arc_next_idx] = S.incident_arcs(k);
  const ParallelArc& arc_s = (side == ArcSide::Forward) ? S.arcs[arc_next_idx] : S.arcs[arc_prev_idx];
  const ParallelArc& arc_p = (side == ArcSide::Forward) ? S.arcs[arc_prev_idx] : S.arcs[arc_next_idx];

  // closed form in the tangent frame at the inflexion
  const Jet j0 = evaluate_jet(S.curve(), t0);
  const Vec2 T = j0.unit_tangent(), N = j0.unit_normal();
  const double u1 = j0.speed;
  const double u2 = j0.d2.dot(T);
  const double w3 = j0.d3.dot(N);
  const double w4 = j0.d4.dot(N);
  const double F3 = w3 / (u1 * u1 * u1);
  const double F4 = (w4 - 6.0 * F3 * u1 * u1 * u2) / (u1 * u1 * u1 * u1);
  if (std::abs(F4) < 1e-8)
    fail(Errc::DegenerateQuartic, "curve is locally centrally symmetric at the inflexion");
  EndpointClassification out;
  out.closed_form = -2.0 * F4 / (3.0 * F3);

  const double sgn = (side == ArcSide::Forward) ? 1.0 : -1.0;
  const double span = std::min(std::abs(arc_s.t_hi - arc_s.t_lo), std::abs(arc_p.t_hi - arc_p.t_lo));
  const double h0 = std::min(0.01, span / 8.0);
  auto ratio = [&](double h) {
    const double s = t0 + sgn * h;
    const double target = S.angle.theta_at(s);
    const double tp = solve_on_arc(S, arc_p, target, t0 - sgn * h, 1e-14);
    return signed_curvature(S.curve(), wrap_two_pi(s)) /
           signed_curvature(S.curve(), wrap_two_pi(tp));
  };
  const double r1 = ratio(h0), r2 = ratio(h0 / 2.0), r4 = ratio(h0 / 4.0);
  out.ratio_limit = 2.0 * r4 - r2;
  const double A1 = (r1 + 1.0) / (sgn * h0);
  const double A2 = (r2 + 1.0) / (sgn * h0 / 2.0);
  const double A4 = (r4 + 1.0) / (sgn * h0 / 4.0);
  const double L = 2.0 * A4 - A2;
  out.ratio_derivative_limit = L;
  if (L * out.closed_form <= 0.0 && std::abs(L - out.closed_form) >
                                        0.5 * std::max(std::abs(L), std::abs(out.closed_form)))
    fail(Errc::InternalError, "ratio-derivative limit disagrees with its closed form");
  (void)A1;
  const bool singular = (side == ArcSide::Forward) ? (L > 0.0) : (L < 0.0);
  out.type = singular ? EndpointType::SingularEndpoint : EndpointType::C1RegularEndpoint;
  return out;
}

}  // namespace equidist
