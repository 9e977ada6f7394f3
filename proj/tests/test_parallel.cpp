#include <doctest.h>

#include "equidist/fixtures.hpp"
#include "equidist/parallel.hpp"
#include "oracles.hpp"

using namespace equidist;

TEST_CASE("angle function of the circle") {
  const AngleFunction af = angle_function(fixtures::circle());
  CHECK(af.rotation() == 1);
  CHECK(af.extrema().empty());
  // theta(t) = t + pi/2 up to the lift's base point
  for (double t : {0.0, 0.5, 2.0, 5.0})
    CHECK(af.theta_at(t) - af.theta_at(0.0) == doctest::Approx(t).epsilon(1e-12));
  CHECK(af.theta_at(0.0) == doctest::Approx(kPi / 2).epsilon(1e-12));
}

TEST_CASE("angle function of convex fixtures has no extrema") {
  CHECK(angle_function(fixtures::perturbed_ellipse()).extrema().empty());
  CHECK(angle_function(fixtures::convex_example()).extrema().empty());
}

TEST_CASE("angle function of w1: two alternating extrema") {
  const AngleFunction af = angle_function(fixtures::w1());
  REQUIRE(af.extrema().size() == 2);
  CHECK(af.extrema()[0].is_max != af.extrema()[1].is_max);
}

TEST_CASE("lift continuity against dense resampling") {
  const AngleFunction af = angle_function(fixtures::rosette(3));
  const auto& th = af.theta_samples();
  for (size_t i = 1; i < th.size(); ++i) CHECK(std::abs(th[i] - th[i - 1]) < kPi / 4);
  CHECK(af.theta_at(kTwoPi) - af.theta_at(0.0) == doctest::Approx(kTwoPi * 3).epsilon(1e-10));
}

TEST_CASE("parallel points of the circle: S_M = {0, pi}") {
  const ParallelStructure S = build_parallel_structure(fixtures::circle());
  REQUIRE(S.point_count() == 2);
  CHECK(S.points[0].t == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(S.points[1].t == doctest::Approx(kPi).epsilon(1e-10));
  REQUIRE(S.phi_sets.size() == 1);
  CHECK(S.phi_sets[0].size() == 2);
}

TEST_CASE("rosettes: #S_M = 2n, one set of 2n arcs") {
  for (int n : {2, 3, 4}) {
    const ParallelStructure S = build_parallel_structure(fixtures::rosette(n));
    CHECK(S.point_count() == 2 * n);
    REQUIRE(S.phi_sets.size() == 1);
    CHECK(static_cast<int>(S.phi_sets[0].size()) == 2 * n);
  }
}

TEST_CASE("w1: #S_M = 6, sets of sizes {2, 4}") {
  const ParallelStructure S = build_parallel_structure(fixtures::w1());
  CHECK(S.point_count() == 6);
  REQUIRE(S.phi_sets.size() == 2);
  std::vector<size_t> sizes = {S.phi_sets[0].size(), S.phi_sets[1].size()};
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes[0] == 2);
  CHECK(sizes[1] == 4);
  int infl = 0;
  for (const auto& p : S.points) infl += p.is_inflexion;
  CHECK(infl == 2);
}

TEST_CASE("every parallel point belongs to exactly two arcs") {
  for (const char* name : {"pe", "c2", "c3", "w1", "infl8"}) {
    const ParallelStructure S = build_parallel_structure(fixtures::by_name(name));
    std::vector<int> uses(S.point_count(), 0);
    for (const auto& arc : S.arcs) {
      ++uses[arc.lo];
      ++uses[arc.hi];
    }
    for (int u : uses) CHECK(u == 2);
    CHECK(S.point_count() % 2 == 0);
  }
}

TEST_CASE("arc interiors contain no inflexions and monotone lifts") {
  const ParallelStructure S = build_parallel_structure(fixtures::w1());
  for (const auto& arc : S.arcs) {
    const int probes = 16;
    const double sgn = arc.theta_hi > arc.theta_lo ? 1.0 : -1.0;
    for (int i = 1; i < probes; ++i) {
      const double t = arc.t_lo + (arc.t_hi - arc.t_lo) * i / probes;
      CHECK(sgn * S.angle.dtheta_at(wrap_two_pi(t)) > 0.0);
    }
  }
}

TEST_CASE("pairing on the circle is the antipodal map") {
  const ParallelStructure S = build_parallel_structure(fixtures::circle());
  const ParallelPairing P = pair_continuation(S, 0, 1);
  REQUIRE(P.nodes.size() >= 2);
  for (const auto& node : P.nodes)
    CHECK(wrap_two_pi(node.t - node.s) == doctest::Approx(kPi).epsilon(1e-10));
}

TEST_CASE("pairing on a centrally symmetric oval is t = s + pi") {
  const ParallelStructure S = build_parallel_structure(fixtures::symmetric_oval());
  REQUIRE(S.phi_sets.size() == 1);
  const auto& set = S.phi_sets[0];
  for (size_t i = 0; i < set.size(); ++i)
    for (size_t j = i + 1; j < set.size(); ++j) {
      const ParallelPairing P = pair_continuation(S, set[i], set[j]);
      for (const auto& node : P.nodes)
        CHECK(std::abs(wrap_pi(node.t - node.s - kPi)) < 1e-9);
    }
}

TEST_CASE("pairing invariants: equal directions, monotone, involutive") {
  const ParallelStructure S = build_parallel_structure(fixtures::perturbed_ellipse());
  REQUIRE(S.phi_sets[0].size() == 2);
  const ParallelPairing P = pair_continuation(S, S.phi_sets[0][0], S.phi_sets[0][1]);
  const ParallelPairing Q = pair_continuation(S, S.phi_sets[0][1], S.phi_sets[0][0]);
  REQUIRE(P.nodes.size() == Q.nodes.size());
  for (size_t i = 0; i < P.nodes.size(); ++i) {
    const auto& node = P.nodes[i];
    // tangent lines parallel within 1e-9 rad
    const double ta = S.angle.theta_at(wrap_two_pi(node.s));
    const double tb = S.angle.theta_at(wrap_two_pi(node.t));
    CHECK(std::abs(std::remainder(ta - tb, kPi)) < 1e-9);
    // psi values agree with the stored level
    CHECK(std::abs(line_angle_diff(S.angle.psi_at(wrap_two_pi(node.s)), node.psi)) < 1e-10);
    // monotone
    if (i > 0) CHECK(node.t > P.nodes[i - 1].t);
    // reverse pairing is the swap
    CHECK(std::abs(Q.nodes[i].s - node.t) < 1e-9);
    CHECK(std::abs(Q.nodes[i].t - node.s) < 1e-9);
  }
}

TEST_CASE("pairing derivative matches the curvature-speed ratio") {
  const ParallelStructure S = build_parallel_structure(fixtures::perturbed_ellipse());
  const ParallelPairing P = pair_continuation(S, S.phi_sets[0][0], S.phi_sets[0][1]);
  // nodes are uniform in the direction level: fourth-order stencils in the
  // level variable give dt/ds = (dt/dl)/(ds/dl)
  auto d4 = [](double m2, double m1, double p1, double p2) {
    return -p2 + 8 * p1 - 8 * m1 + m2;
  };
  for (size_t i = 2; i + 2 < P.nodes.size(); i += 7) {
    const double dt = d4(P.nodes[i - 2].t, P.nodes[i - 1].t, P.nodes[i + 1].t, P.nodes[i + 2].t);
    const double ds = d4(P.nodes[i - 2].s, P.nodes[i - 1].s, P.nodes[i + 1].s, P.nodes[i + 2].s);
    const double tprime = dt / ds;
    const auto& node = P.nodes[i];
    const Jet js = evaluate_jet(S.curve(), wrap_two_pi(node.s));
    const Jet jt = evaluate_jet(S.curve(), wrap_two_pi(node.t));
    const double expect = (js.kappa * js.speed) / (jt.kappa * jt.speed);
    CHECK(tprime == doctest::Approx(expect).epsilon(1e-5));
  }
}

TEST_CASE("parallel partners") {
  const ParallelStructure circle = build_parallel_structure(fixtures::circle());
  const auto part = parallel_partners(circle, 0.3);
  REQUIRE(part.size() == 1);
  CHECK(part[0] == doctest::Approx(0.3 + kPi).epsilon(1e-10));

  const ParallelStructure c2 = build_parallel_structure(fixtures::rosette(2));
  CHECK(parallel_partners(c2, 0.7).size() == 3);

  // at an inflexion the number of partners is even
  const ParallelStructure w1 = build_parallel_structure(fixtures::w1());
  for (const auto& p : w1.points)
    if (p.is_inflexion) CHECK(parallel_partners(w1, p.t).size() % 2 == 0);
}

TEST_CASE("random curves: even point counts and arcs per set") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 10; ++i) {
    const FourierCurve c = random_generic_curve(rng);
    const ParallelStructure S = build_parallel_structure(c, 2048);
    CHECK(S.point_count() % 2 == 0);
    int covered = 0;
    for (const auto& set : S.phi_sets) covered += static_cast<int>(set.size());
    CHECK(covered == S.arc_count());
  }
}
