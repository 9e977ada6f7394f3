#include <doctest.h>

#include "equidist/curve_analysis.hpp"
#include "equidist/fixtures.hpp"
#include "oracles.hpp"

using namespace equidist;

TEST_CASE("jet of the unit circle") {
  const FourierCurve c = fixtures::circle();
  const Jet j = evaluate_jet(c, 0.0);
  CHECK(j.f.x() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(j.f.y() == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(j.kappa == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(j.speed == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("jet of the 2:1 ellipse at t=0") {
  const FourierCurve c = fixtures::ellipse();
  CHECK(signed_curvature(c, 0.0) == doctest::Approx(2.0).epsilon(1e-14));
  // kappa = ab / (a^2 sin^2 + b^2 cos^2)^{3/2}
  for (double t : {0.3, 1.1, 2.9, 4.2}) {
    const double expect = 2.0 / std::pow(4 * std::sin(t) * std::sin(t) +
                                         std::cos(t) * std::cos(t), 1.5);
    CHECK(signed_curvature(c, t) == doctest::Approx(expect).epsilon(1e-13));
  }
}

TEST_CASE("jet matches finite differences on a fixture curve") {
  const FourierCurve c = fixtures::w1();
  const double t = 1.234;
  const Jet j = evaluate_jet(c, t);
  const Vec2 d1 = oracles::fd_derivative(c, t, 1);
  const Vec2 d2 = oracles::fd_derivative(c, t, 2);
  CHECK((j.d1 - d1).norm() / d1.norm() < 1e-6);
  CHECK((j.d2 - d2).norm() / d2.norm() < 1e-6);
  CHECK(j.kappa == doctest::Approx(oracles::fd_curvature(c, t)).epsilon(1e-6));
}

TEST_CASE("curvature sign flips with orientation") {
  const FourierCurve pos = fixtures::circle(2.0, true);
  const FourierCurve neg = reversed(pos);
  for (double t : {0.0, 1.0, 3.5}) {
    CHECK(signed_curvature(pos, t) == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(signed_curvature(neg, t) == doctest::Approx(-0.5).epsilon(1e-13));
  }
}

TEST_CASE("kappa roots are bracketed by sign changes on a curve with inflexions") {
  const FourierCurve c = fixtures::w1();
  const auto brackets = oracles::curvature_sign_changes(c);
  REQUIRE(brackets.size() == 2);
  const auto infl = inflexion_points(c);
  REQUIRE(infl.size() == 2);
  for (size_t i = 0; i < 2; ++i) {
    CHECK(infl[i].t >= brackets[i].first);
    CHECK(infl[i].t <= brackets[i].second);
    CHECK(std::abs(signed_curvature(c, infl[i].t)) < 1e-12);
  }
}

TEST_CASE("inflexion counts on fixtures") {
  CHECK(inflexion_points(fixtures::perturbed_ellipse()).empty());
  CHECK(inflexion_points(fixtures::convex_example()).empty());
  CHECK(inflexion_points(fixtures::w1()).size() == 2);
  CHECK(inflexion_points(fixtures::w2()).size() == 2);
  const auto infl8 = inflexion_points(fixtures::eight_inflexions());
  CHECK(infl8.size() == 8);
  CHECK(infl8.size() == 2 * oracles::curvature_sign_changes(fixtures::eight_inflexions()).size() / 2);
}

TEST_CASE("degenerate double root is rejected") {
  CHECK_THROWS_AS(inflexion_points(fixtures::degenerate_inflexion_curve()), Error);
}

TEST_CASE("rotation numbers") {
  CHECK(rotation_number(fixtures::circle()) == 1);
  CHECK(rotation_number(reversed(fixtures::circle())) == -1);
  CHECK(rotation_number(fixtures::rosette(2)) == 2);
  CHECK(rotation_number(fixtures::rosette(3)) == 3);
  CHECK(rotation_number(fixtures::rosette(4)) == 4);
  CHECK(rotation_number(fixtures::w1()) == 1);
  CHECK(rotation_number(fixtures::w2()) == 2);
}

TEST_CASE("rotation number is invariant under positive affine maps") {
  Eigen::Matrix2d A;
  A << 2.0, 0.7, -0.3, 1.4;  // det > 0
  REQUIRE(A.determinant() > 0);
  for (const auto& [name, curve] : fixtures::all()) {
    if (name == "degenerate-inflexion") continue;
    const FourierCurve mapped = affine_transform(curve, A, Vec2(0.3, -1.0));
    CHECK(rotation_number(mapped) == rotation_number(curve));
  }
}

TEST_CASE("orientation reversal negates curvature pointwise and the rotation number") {
  const FourierCurve c = fixtures::w1();
  const FourierCurve r = reversed(c);
  CHECK(rotation_number(r) == -rotation_number(c));
  for (double t : {0.2, 1.7, 3.0, 5.1})
    CHECK(signed_curvature(r, kTwoPi - t) == doctest::Approx(-signed_curvature(c, t)).epsilon(1e-12));
}

TEST_CASE("genericity check: circle flagged, perturbed ellipse passes") {
  const GenericityReport circle_rep = genericity_check(fixtures::circle());
  CHECK(!circle_rep.generic());
  CHECK(circle_rep.centrally_symmetric);

  const GenericityReport ell_rep = genericity_check(fixtures::ellipse());
  CHECK(ell_rep.centrally_symmetric);  // pure first harmonic

  CHECK(genericity_check(fixtures::convex_example()).generic());
  CHECK(genericity_check(fixtures::perturbed_ellipse()).generic());
  CHECK(genericity_check(fixtures::w1()).generic());

  const GenericityReport degen = genericity_check(fixtures::degenerate_inflexion_curve());
  CHECK(degen.degenerate_inflexion);
  CHECK(!degen.generic());
}

TEST_CASE("irregular curves are rejected at construction") {
  // x = cos t - cos t: zero velocity everywhere
  ArrayXd z = ArrayXd::Zero(2);
  CHECK_THROWS_AS(FourierCurve(z, z, z, z), Error);
}

TEST_CASE("random generic curves have even inflexion counts") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 20; ++i) {
    const FourierCurve c = random_generic_curve(rng);
    CHECK(inflexion_points(c).size() % 2 == 0);
  }
}
