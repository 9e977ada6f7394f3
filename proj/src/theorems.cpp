#include "equidist/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "equidist/root_find.hpp"

namespace equidist {

void VerificationReport::add(const std::string& name, const std::string& expected,
                             const std::string& observed, bool pass,
                             const std::string& tolerance) {
  checks.push_back({name, expected, observed, pass, tolerance});
}

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

void VerificationReport::merge(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::string report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["all_pass"] = report.all_pass();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["expected"] = c.expected;
    cj["observed"] = c.observed;
    cj["pass"] = c.pass;
    cj["tolerance"] = c.tolerance;
    j["checks"].push_back(cj);
  }
  return j.dump(2) + "\n";
}

std::string report_summary(const VerificationReport& report) {
  std::ostringstream os;
  int npass = 0;
  for (const auto& c : report.checks) {
    os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": expected " << c.expected
       << ", observed " << c.observed;
    if (!c.tolerance.empty() && c.tolerance != "exact") os << " (tol " << c.tolerance << ")";
    os << "\n";
    npass += c.pass;
  }
  os << npass << "/" << report.checks.size() << " checks passed\n";
  return os.str();
}

// --- singular intervals --------------------------------------------------

SingularIntervalPrediction singular_intervals_from_ratios(double rho_min, double rho_max,
                                                          bool same_side) {
  if (!(rho_min > 0.0) || rho_max < rho_min)
    fail(Errc::InvalidInput, "curvature ratios must satisfy 0 < rho_min <= rho_max");
  SingularIntervalPrediction pred;
  pred.rho_min = rho_min;
  pred.rho_max = rho_max;
  pred.same_side = same_side;
  auto ordered = [](double a, double b) {
    LambdaInterval iv;
    iv.lo = std::min(a, b);
    iv.hi = std::max(a, b);
    return iv;
  };
  if (!same_side) {
    const double a = rho_min / (1.0 + rho_min), b = rho_max / (1.0 + rho_max);
    pred.intervals.push_back(ordered(a, b));
    pred.intervals.push_back(ordered(1.0 - b, 1.0 - a));
  } else if (rho_min > 1.0) {
    const double a = rho_min / (rho_min - 1.0), b = rho_max / (rho_max - 1.0);
    pred.intervals.push_back(ordered(a, b));
    pred.intervals.push_back(ordered(1.0 - a, 1.0 - b));
  } else if (rho_max > 1.0) {
    const double b = rho_max / (rho_max - 1.0);
    LambdaInterval left;
    left.unbounded_lo = true;
    left.hi = 1.0 - b;
    LambdaInterval right;
    right.lo = b;
    right.unbounded_hi = true;
    pred.intervals.push_back(left);
    pred.intervals.push_back(right);
  } else {
    fail(Errc::HypothesisViolated, "same-side prediction needs rho_max > 1");
  }
  return pred;
}

double oval_partner(const AngleFunction& angle, double s) {
  const double target = angle.theta_at(s) + kPi;
  auto g = [&](double t) { return angle.theta_at(t) - target; };
  auto dg = [&](double t) { return angle.dtheta_at(t); };
  return monotone_solve(g, dg, s + 1e-9, s + kTwoPi - 1e-9, s + kPi);
}

namespace {

// curved same side at the pair: the centres of curvature of the curve at a
// and of the translated curve at a lie on the same side of the tangent line
bool curved_same_side(const FourierCurve& curve, double sa, double sb) {
  const Jet ja = evaluate_jet(curve, wrap_two_pi(sa));
  const Jet jb = evaluate_jet(curve, wrap_two_pi(sb));
  const Vec2 na = ja.unit_normal(), nb = jb.unit_normal();
  const Vec2 ca = na / ja.kappa;                      // centre of curvature offset at a
  const Vec2 cb = nb / jb.kappa;                      // offset at b, translated to a
  const double da = ca.dot(na);
  const double db = cb.dot(na);
  return da * db > 0.0;
}

double pair_ratio(const ParallelStructure& S, double s) {
  const double t = oval_partner(S.angle, s);
  return signed_curvature(S.curve(), wrap_two_pi(s)) /
         signed_curvature(S.curve(), wrap_two_pi(t));
}

}  // namespace

SingularIntervalPrediction predict_singular_intervals(const ParallelStructure& S,
                                                      const ArcPairSpec& arcs) {
  const FourierCurve& curve = S.curve();
  const AngleFunction& angle = S.angle;
  const double s0 = arcs.s_lo, s1 = arcs.s_hi;
  const double t0 = oval_partner(angle, s0), t1 = oval_partner(angle, s1);

  // (i) endpoint parallelism
  for (auto [a, b] : {std::pair{s0, t0}, std::pair{s1, t1}}) {
    const double da = angle.theta_at(a), db = angle.theta_at(b);
    if (std::abs(std::remainder(da - db, kPi)) > 1e-8)
      fail(Errc::HypothesisViolated, "arc endpoints are not parallel pairs");
  }
  // (iii) curvature positivity: both arcs entirely positive here
  const int scan = 256;
  for (int i = 0; i <= scan; ++i) {
    const double s = s0 + (s1 - s0) * i / scan;
    if (signed_curvature(curve, wrap_two_pi(s)) <= 0.0 ||
        signed_curvature(curve, wrap_two_pi(oval_partner(angle, s))) <= 0.0)
      fail(Errc::HypothesisViolated, "curvature must stay positive on the arcs");
  }
  // (iv) rotation of the partner arc below 1/2
  if (std::abs(angle.theta_at(t1) - angle.theta_at(t0)) >= kPi)
    fail(Errc::HypothesisViolated, "partner arc rotation must stay below 1/2");
  // (v) side condition at the endpoint pairs
  const bool same0 = curved_same_side(curve, s0, t0);
  const bool same1 = curved_same_side(curve, s1, t1);
  if (same0 != same1)
    fail(Errc::HypothesisViolated, "endpoint pairs disagree on the side condition");

  const double r0 = pair_ratio(S, s0);
  const double r1 = pair_ratio(S, s1);
  return singular_intervals_from_ratios(std::min(r0, r1), std::max(r0, r1), same0);
}

int two_arc_cusp_count(const ParallelStructure& S, const ArcPairSpec& arcs, double lambda,
                       int samples) {
  int count = 0;
  double prev1 = 0.0, prev2 = 0.0;
  for (int i = 0; i <= samples; ++i) {
    const double s = arcs.s_lo + (arcs.s_hi - arcs.s_lo) * i / samples;
    const double t = oval_partner(S.angle, s);
    const double ka = signed_curvature(S.curve(), wrap_two_pi(s));
    const double kb = signed_curvature(S.curve(), wrap_two_pi(t));
    // tangent lifts differ by pi: the opposite-direction convention keeps kb
    const double m1 = (1.0 - lambda) * ka - lambda * kb;
    const double m2 = (1.0 - lambda) * kb - lambda * ka;
    if (i > 0) {
      if (m1 * prev1 < 0.0) ++count;
      if (m2 * prev2 < 0.0) ++count;
    }
    prev1 = m1;
    prev2 = m2;
  }
  return count;
}

ArcPairSpec ratio_egg_arcs(const ParallelStructure& S) {
  // the ratio sweeps monotonically through [2, 3] on this bracket
  auto g2 = [&](double s) { return pair_ratio(S, s) - 2.0; };
  auto g3 = [&](double s) { return pair_ratio(S, s) - 3.0; };
  ArcPairSpec spec;
  spec.s_lo = refine_root(g2, 1.0, 2.0, 1e-12);
  spec.s_hi = refine_root(g3, 1.0, 2.0, 1e-12);
  if (spec.s_hi < spec.s_lo) std::swap(spec.s_lo, spec.s_hi);
  return spec;
}

int loop_wigner_cusp_count(const AngleFunction& angle, double t1, double t2, int samples) {
  const double th1 = angle.theta_at(t1), th2 = angle.theta_at(t2);
  if (std::abs(th2 - th1) <= kPi)
    fail(Errc::InvalidInput, "loop subtends less than a half turn; no parallel pairs inside");
  const double sign = th2 > th1 ? 1.0 : -1.0;
  // s runs until its partner reaches the far end
  auto partner = [&](double s) {
    const double target = angle.theta_at(s) + sign * kPi;
    auto g = [&](double t) { return angle.theta_at(t) - target; };
    auto dg = [&](double t) { return angle.dtheta_at(t); };
    return monotone_solve(g, dg, std::min(s, t2), t2, s + 0.5 * (t2 - s));
  };
  auto g_end = [&](double s) { return angle.theta_at(s) - (th2 - sign * kPi); };
  const double s_max = refine_root(g_end, t1, t2, 1e-12);
  int count = 0;
  double prev = 0.0;
  for (int i = 0; i <= samples; ++i) {
    const double s = t1 + (s_max - t1) * i / samples;
    const double v = partner(s);
    const double m = signed_curvature(angle.curve(), wrap_two_pi(s)) -
                     signed_curvature(angle.curve(), wrap_two_pi(v));
    if (i > 0 && m * prev < 0.0) ++count;
    prev = m;
  }
  return count;
}

// --- theorem checks ------------------------------------------------------

namespace {

int total_cusps(const std::vector<Branch>& branches) {
  int n = 0;
  for (const auto& b : branches) n += static_cast<int>(b.cusps.size());
  return n;
}

int total_inflexions(const std::vector<Branch>& branches) {
  int n = 0;
  for (const auto& b : branches) n += static_cast<int>(b.inflexions.size());
  return n;
}

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

VerificationReport check_cusp_parity(const ParallelStructure& S,
                                     const std::vector<double>& lambda_grid) {
  VerificationReport rep;
  const auto half = full_equidistant(S, 0.5);
  const int half_cusps = total_cusps(half);
  rep.add("wigner cusp count odd and >= 3", "odd, >= 3", std::to_string(half_cusps),
          half_cusps % 2 == 1 && half_cusps >= 3);
  for (double lambda : lambda_grid) {
    const auto branches = full_equidistant(S, lambda);
    const int cusps = total_cusps(branches);
    rep.add("generic cusp count even (lambda=" + fmt(lambda) + ")", "even",
            std::to_string(cusps), cusps % 2 == 0);
  }
  const CssCurve css = css_curve(S);
  const int css_cusps = css_cusp_count(css);
  rep.add("css cusp count odd and >= 3", "odd, >= 3", std::to_string(css_cusps),
          css_cusps % 2 == 1 && css_cusps >= 3);
  rep.add("css cusp count >= wigner cusp count", ">= " + std::to_string(half_cusps),
          std::to_string(css_cusps), css_cusps >= half_cusps);
  return rep;
}

VerificationReport check_composition(const ParallelStructure& S, double lambda, double delta) {
  VerificationReport rep;
  const auto inner = full_equidistant(S, lambda);
  if (inner.size() != 1)
    fail(Errc::HypothesisViolated, "composition check expects a convex curve (one branch)");
  const PolylineCurve poly = PolylineCurve::from_branch(inner.front());
  const std::vector<Vec2> composed = poly.equidistant_points(delta, 4096);

  const double target_lambda = delta * (1.0 - lambda) + lambda * (1.0 - delta);
  const auto target = full_equidistant(S, target_lambda);
  const std::vector<Vec2> target_pts = branches_points(target);

  const double spacing = std::max(max_node_spacing(composed), max_node_spacing(target_pts));
  const double dist = hausdorff_distance(composed, target_pts);
  std::ostringstream name;
  name << "composition lambda=" << lambda << " delta=" << delta << " -> " << target_lambda;
  rep.add(name.str(), "hausdorff < " + fmt(5.0 * spacing), fmt(dist), dist < 5.0 * spacing,
          "5x node spacing");
  return rep;
}

VerificationReport check_rosette(int n) {
  VerificationReport rep;
  const FourierCurve curve = fixtures::rosette(n);
  const ParallelStructure S = build_parallel_structure(curve);
  const std::string tag = "c" + std::to_string(n) + ": ";

  rep.add(tag + "#S_M", std::to_string(2 * n), std::to_string(S.point_count()),
          S.point_count() == 2 * n);

  const auto half = full_equidistant(S, 0.5);
  rep.add(tag + "wigner branch count", std::to_string(n), std::to_string(half.size()),
          static_cast<int>(half.size()) == n);

  const double lambda = 0.4;
  const auto gen = full_equidistant(S, lambda);
  rep.add(tag + "generic branch count", std::to_string(2 * n - 1), std::to_string(gen.size()),
          static_cast<int>(gen.size()) == 2 * n - 1);

  // rotation numbers: n-1 half branches at n, one at n/2; generic all n
  std::vector<int> half_rot;
  for (const auto& b : half) half_rot.push_back(b.rotation_twice.value_or(-999));
  std::sort(half_rot.begin(), half_rot.end());
  std::vector<int> expect_rot(n - 1, 2 * n);
  expect_rot.insert(expect_rot.begin(), n);
  std::sort(expect_rot.begin(), expect_rot.end());
  {
    std::ostringstream e, o;
    for (int r : expect_rot) e << r << "/2 ";
    for (int r : half_rot) o << r << "/2 ";
    rep.add(tag + "wigner rotation numbers", e.str(), o.str(), half_rot == expect_rot);
  }
  bool gen_rot_ok = true;
  for (const auto& b : gen) gen_rot_ok &= b.rotation_twice.value_or(-999) == 2 * n;
  rep.add(tag + "generic rotation numbers all n", std::to_string(n), gen_rot_ok ? "yes" : "no",
          gen_rot_ok);

  // cusp parities
  int odd = 0;
  for (const auto& b : half) odd += static_cast<int>(b.cusps.size()) % 2;
  if (n % 2 == 0)
    rep.add(tag + "all wigner branches even cusps", "0 odd", std::to_string(odd), odd == 0);
  else
    rep.add(tag + "exactly one odd-cusp wigner branch", "1 odd", std::to_string(odd), odd == 1);

  int regular_half = 0;
  for (const auto& b : half) regular_half += b.cusps.empty() && b.inflexions.empty();
  rep.add(tag + "cusp-free wigner branches", ">= " + std::to_string(n / 2),
          std::to_string(regular_half), regular_half >= n / 2);

  int regular_gen = 0;
  for (const auto& b : gen) regular_gen += b.cusps.empty() && b.inflexions.empty();
  rep.add(tag + "cusp-free generic branches", ">= " + std::to_string(n - 1),
          std::to_string(regular_gen), regular_gen >= n - 1);

  const int cusps_total = total_cusps(half);
  rep.add(tag + "total wigner cusps", ">= 2", std::to_string(cusps_total), cusps_total >= 2);

  // cusps created from loops share one branch
  const auto loops = self_intersections(curve);
  std::vector<int> owner;
  for (size_t bi = 0; bi < half.size(); ++bi) {
    for (const auto& c : half[bi].cusps) {
      for (const auto& loop : loops) {
        if (c.s >= loop.t1 && c.s <= loop.t2 && c.t >= loop.t1 && c.t <= loop.t2)
          owner.push_back(static_cast<int>(bi));
      }
    }
  }
  const bool one_branch =
      owner.empty() || std::all_of(owner.begin(), owner.end(),
                                   [&](int b) { return b == owner.front(); });
  rep.add(tag + "loop cusps share one branch",
          "single branch (" + std::to_string(owner.size()) + " loop cusps)",
          one_branch ? "yes" : "no", one_branch && !owner.empty());
  return rep;
}

VerificationReport check_wn(const ParallelStructure& S) {
  VerificationReport rep;
  const int m2 = S.point_count();
  int n_infl = 0;
  for (const auto& p : S.points) n_infl += p.is_inflexion;
  rep.add("w1: #S_M", "6", std::to_string(m2), m2 == 6);
  rep.add("w1: inflexion count", "2", std::to_string(n_infl), n_infl == 2);

  const auto half = full_equidistant(S, 0.5);
  rep.add("w1: wigner branch count", "2", std::to_string(half.size()), half.size() == 2);
  int on_shell = 0;
  const Branch* shell = nullptr;
  for (const auto& b : half)
    if (b.on_shell) {
      ++on_shell;
      shell = &b;
    }
  rep.add("w1: on-shell wigner branches", "1", std::to_string(on_shell), on_shell == 1);

  const auto gen = full_equidistant(S, 0.3);
  rep.add("w1: generic branch count", "2", std::to_string(gen.size()), gen.size() == 2);
  std::vector<int> gi;
  for (const auto& b : gen) gi.push_back(static_cast<int>(b.inflexions.size()));
  std::sort(gi.begin(), gi.end());
  rep.add("w1: generic inflexion counts", "{4, 6}",
          "{" + std::to_string(gi.size() > 0 ? gi[0] : -1) + ", " +
              std::to_string(gi.size() > 1 ? gi[1] : -1) + "}",
          gi == std::vector<int>({4, 6}));

  // 2m - 2n with #S_M = 2m and n_infl = 2n
  const int half_infl = total_inflexions(half);
  rep.add("w1: wigner inflexion total = 2m-2n", std::to_string(m2 - n_infl),
          std::to_string(half_infl), half_infl == m2 - n_infl);

  if (shell) {
    rep.add("w1: on-shell inflexion count even", "even",
            std::to_string(shell->inflexions.size()), shell->inflexions.size() % 2 == 0);
    // cusp parity from the endpoint classifications
    const auto& pairs = shell->scheme.pairs;
    const double tk = S.points[pairs.front().first].t;
    const double tl = S.points[pairs.back().first].t;
    const auto ek = classify_onshell_endpoint(S, tk, ArcSide::Forward);
    const auto el = classify_onshell_endpoint(S, tl, ArcSide::Backward);
    const bool xor_singular = (ek.type == EndpointType::SingularEndpoint) !=
                              (el.type == EndpointType::SingularEndpoint);
    const bool odd = shell->cusps.size() % 2 == 1;
    rep.add("w1: on-shell cusp parity = endpoint XOR", xor_singular ? "odd" : "even",
            odd ? "odd" : "even", odd == xor_singular);
  }

  // closed wigner branch has rotation n/2
  for (const auto& b : half)
    if (!b.on_shell && b.rotation_twice)
      rep.add("w1: closed wigner branch rotation", "1/2",
              std::to_string(*b.rotation_twice) + "/2", *b.rotation_twice == 1);
  return rep;
}

VerificationReport check_inflexion_counts(const ParallelStructure& S, double lambda) {
  VerificationReport rep;
  const int m2 = S.point_count();
  int n2 = 0;
  for (const auto& p : S.points) n2 += p.is_inflexion;
  if (n2 == 0) {
    const auto half = full_equidistant(S, 0.5);
    const auto gen = full_equidistant(S, lambda);
    rep.add("convex inflexion totals", "0 and 0",
            std::to_string(total_inflexions(half)) + " and " +
                std::to_string(total_inflexions(gen)),
            total_inflexions(half) == 0 && total_inflexions(gen) == 0);
    return rep;
  }
  const auto half = full_equidistant(S, 0.5);
  const auto gen = full_equidistant(S, lambda);
  rep.add("wigner inflexion total 2m-2n", std::to_string(m2 - n2),
          std::to_string(total_inflexions(half)), total_inflexions(half) == m2 - n2);
  rep.add("generic inflexion total 4m-2n", std::to_string(2 * m2 - n2),
          std::to_string(total_inflexions(gen)), total_inflexions(gen) == 2 * m2 - n2);

  // every branch inflexion lies on the chord of a pair containing a curve inflexion
  bool chords_ok = true;
  for (const auto& b : gen)
    for (const auto& bi : b.inflexions) {
      const Vec2 a = S.curve().position(bi.s), c = S.curve().position(bi.t);
      const double off = std::abs(cross2(bi.pos - a, c - a)) / std::max(1e-12, (c - a).norm());
      const bool on_infl_chord = std::abs(signed_curvature(S.curve(), bi.s)) < 1e-6 ||
                                 std::abs(signed_curvature(S.curve(), bi.t)) < 1e-6;
      chords_ok &= off < 1e-8 && on_infl_chord;
    }
  rep.add("generic inflexions on inflexion chords", "all", chords_ok ? "all" : "violation",
          chords_ok);
  return rep;
}

VerificationReport check_onshell_parity(const ParallelStructure& S) {
  VerificationReport rep;
  const auto half = full_equidistant(S, 0.5);
  int shells = 0;
  for (const auto& b : half) {
    if (!b.on_shell) continue;
    ++shells;
    const double tk = S.points[b.scheme.pairs.front().first].t;
    const double tl = S.points[b.scheme.pairs.back().first].t;
    const auto ek = classify_onshell_endpoint(S, tk, ArcSide::Forward);
    const auto el = classify_onshell_endpoint(S, tl, ArcSide::Backward);
    const bool xor_singular = (ek.type == EndpointType::SingularEndpoint) !=
                              (el.type == EndpointType::SingularEndpoint);
    const bool odd = b.cusps.size() % 2 == 1;
    std::ostringstream name;
    name << "on-shell parity at (" << fmt(tk) << ", " << fmt(tl) << ")";
    rep.add(name.str(), xor_singular ? "odd" : "even", odd ? "odd" : "even",
            odd == xor_singular);

    // inner-arc inflexions between the endpoints are even in number
    int inner = 0;
    for (const auto& p : S.points) {
      if (!p.is_inflexion) continue;
      if (std::abs(wrap_pi(p.t - tk)) < 1e-9 || std::abs(wrap_pi(p.t - tl)) < 1e-9) continue;
      const double rel = wrap_two_pi(p.t - tk);
      if (rel < wrap_two_pi(tl - tk)) ++inner;
    }
    rep.add(name.str() + " inner-arc inflexions even", "even", std::to_string(inner),
            inner % 2 == 0);
  }
  int n_infl = 0;
  for (const auto& p : S.points) n_infl += p.is_inflexion;
  rep.add("on-shell branch count = n", std::to_string(n_infl / 2), std::to_string(shells),
          shells == n_infl / 2);
  return rep;
}

VerificationReport check_random_invariants(unsigned long long seed, int count, int samples) {
  VerificationReport rep;
  std::mt19937_64 rng(seed);
  int violations = 0;
  std::string first_violation;
  for (int i = 0; i < count; ++i) {
    const FourierCurve curve = random_generic_curve(rng);
    try {
      const auto infl = inflexion_points(curve);
      if (infl.size() % 2 != 0) {
        ++violations;
        if (first_violation.empty()) first_violation = "odd inflexion count";
        continue;
      }
      const ParallelStructure S = build_parallel_structure(curve, samples);
      if (S.point_count() % 2 != 0) {
        ++violations;
        if (first_violation.empty()) first_violation = "odd #S_M";
        continue;
      }
      // arc accounting is enforced inside maximal_schemes
      maximal_schemes(S, LambdaClass::Half);
      maximal_schemes(S, LambdaClass::Generic);
      const auto a = full_equidistant(S, 0.3);
      const auto b = full_equidistant(S, 0.7);
      const double d = hausdorff_distance(branches_points(a), branches_points(b));
      if (d > 1e-6) {
        ++violations;
        if (first_violation.empty())
          first_violation = "E_lambda != E_{1-lambda}, hausdorff " + fmt(d);
      }
    } catch (const Error& e) {
      ++violations;
      if (first_violation.empty()) first_violation = e.what();
    }
  }
  rep.add("randomized invariants over " + std::to_string(count) + " curves (seed " +
              std::to_string(seed) + ")",
          "0 violations",
          std::to_string(violations) +
              (first_violation.empty() ? "" : " (first: " + first_violation + ")"),
          violations == 0, "hausdorff 1e-6");
  return rep;
}

VerificationReport verify_fixtures(int samples) {
  VerificationReport rep;

  {
    const ParallelStructure pe = build_parallel_structure(fixtures::perturbed_ellipse(), samples);
    rep.merge(check_cusp_parity(pe, {0.2, 0.3, 0.4, 0.45}));
    rep.merge(check_composition(pe, 0.3, 0.3));
    rep.merge(check_composition(pe, 0.3, 0.5));
    rep.merge(check_composition(pe, 0.25, 0.4));
    rep.merge(check_composition(pe, 0.3, -0.3 / (1.0 - 2.0 * 0.3)));  // reconstruction
  }
  rep.merge(check_rosette(2));
  rep.merge(check_rosette(3));
  {
    const ParallelStructure w1 = build_parallel_structure(fixtures::w1(), samples);
    rep.merge(check_wn(w1));
    rep.merge(check_inflexion_counts(w1, 0.3));
    rep.merge(check_onshell_parity(w1));
    // every lambda in (0,1) gives a singular equidistant (two inflexions)
    bool all_singular = true;
    for (double lambda : {0.15, 0.3, 0.45, 0.6, 0.85}) {
      const auto branches = full_equidistant(w1, lambda);
      all_singular &= total_cusps(branches) >= 1;
    }
    rep.add("w1: every equidistant singular", "cusps at all sampled lambda",
            all_singular ? "yes" : "no", all_singular);
  }
  {
    const ParallelStructure egg = build_parallel_structure(fixtures::ratio_egg(), samples);
    const ArcPairSpec arcs = ratio_egg_arcs(egg);
    const auto pred = predict_singular_intervals(egg, arcs);
    const bool rho_ok = std::abs(pred.rho_min - 2.0) < 1e-6 && std::abs(pred.rho_max - 3.0) < 1e-6;
    rep.add("egg: endpoint curvature ratios", "{2, 3}",
            "{" + fmt(pred.rho_min) + ", " + fmt(pred.rho_max) + "}", rho_ok, "1e-6");
    int hits = 0, tries = 0;
    for (const auto& iv : pred.intervals) {
      for (int i = 1; i <= 4; ++i) {
        const double lambda = iv.lo + (iv.hi - iv.lo) * i / 5.0;
        ++tries;
        hits += two_arc_cusp_count(egg, arcs, lambda) >= 1;
      }
    }
    rep.add("egg: cusps at sampled lambda in predicted intervals",
            std::to_string(tries) + " hits", std::to_string(hits), hits == tries);
  }
  {
    // loop: the inner loop of the c2 rosette
    const FourierCurve c2 = fixtures::rosette(2);
    const auto loops = self_intersections(c2);
    bool found = false;
    int cusps = 0;
    for (const auto& loop : loops) {
      const AngleFunction angle = angle_function(c2, samples);
      if (std::abs(angle.theta_at(loop.t2) - angle.theta_at(loop.t1)) > kPi) {
        cusps = loop_wigner_cusp_count(angle, loop.t1, loop.t2);
        found = true;
        break;
      }
    }
    rep.add("loop wigner caustic singular", ">= 1 cusp", std::to_string(cusps),
            found && cusps >= 1);
  }
  return rep;
}

}  // namespace equidist
