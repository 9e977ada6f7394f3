#include "equidist/fixtures.hpp"

#include "equidist/curve_analysis.hpp"

namespace equidist {
namespace fixtures {

namespace {

ArrayXd coeffs(std::initializer_list<double> v) {
  ArrayXd a(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) a[i++] = x;
  return a;
}

}  // namespace

FourierCurve circle(double radius, bool positive) {
  return FourierCurve(coeffs({0, radius}), coeffs({0, 0}), coeffs({0, 0}),
                      coeffs({0, positive ? radius : -radius}), "circle");
}

FourierCurve ellipse(double a, double b) {
  return FourierCurve(coeffs({0, a}), coeffs({0, 0}), coeffs({0, 0}), coeffs({0, b}), "ellipse");
}

FourierCurve perturbed_ellipse() {
  return FourierCurve(coeffs({0, 1, 0.06}), coeffs({0, 0, 0}), coeffs({0, 0, 0}),
                      coeffs({0, 1, -0.06}), "pe");
}

FourierCurve convex_example() {
  return FourierCurve(coeffs({0, 2, 0.1}), coeffs({0, 0, 0}), coeffs({0, 0, 0}),
                      coeffs({0, 1, 0}), "convex");
}

FourierCurve symmetric_oval() {
  // convex: the curvature numerator 1 + 27 c^2 + 12 c cos 2t stays positive
  return FourierCurve(coeffs({0, 1, 0, 0.08}), coeffs({0, 0, 0, 0}), coeffs({0, 0, 0, 0}),
                      coeffs({0, 1, 0, 0.08}), "symmetric-oval");
}

FourierCurve degenerate_inflexion_curve() {
  return FourierCurve(coeffs({0, 1, 0.25}), coeffs({0, 0, 0}), coeffs({0, 0, 0}),
                      coeffs({0, 1, 0.25}), "degenerate-inflexion");
}

FourierCurve rosette(int n) {
  switch (n) {
    case 2:
      // limacon r = 1 + 2 cos t plus a small symmetry-breaking harmonic
      return FourierCurve(coeffs({1, 1, 1, 0}), coeffs({0, 0, 0, -0.04}),
                          coeffs({0, 0, 0, 0.04}), coeffs({0, 1, 1, 0}), "c2");
    case 3:
      return FourierCurve(coeffs({0, 0.18, 0.12, 1}), coeffs({0, 0, 0, 0}),
                          coeffs({0, 0, 0, 0}), coeffs({0, 0.18, 0.12, 1}), "c3");
    case 4:
      return FourierCurve(coeffs({0, 0.15, 0, 0.1, 1}), coeffs({0, 0, 0, 0, 0}),
                          coeffs({0, 0, 0, 0, 0}), coeffs({0, 0.15, 0, 0.1, 1}), "c4");
    default:
      fail(Errc::InvalidInput, "rosette fixtures cover n in {2, 3, 4}");
  }
}

FourierCurve w1() {
  return FourierCurve(coeffs({0, 1, 0.35, 0}), coeffs({0, 0, 0, -0.03}),
                      coeffs({0, 0, 0, 0.03}), coeffs({0, 1, 0.35, 0}), "w1");
}

FourierCurve w2() {
  return FourierCurve(coeffs({0, 0, 1, 0.5, 0}), coeffs({0, 0, 0, 0, -0.02}),
                      coeffs({0, 0, 0, 0, 0.02}), coeffs({0, 0, 1, 0.5, 0}), "w2");
}

FourierCurve eight_inflexions() {
  return FourierCurve(coeffs({0, 1, 0, 0, 0.02, 0.055}), coeffs({0, 0, 0, 0, 0, 0}),
                      coeffs({0, 0, 0, 0, 0, 0}), coeffs({0, 1, 0, 0, 0.02, 0.055}), "infl8");
}

FourierCurve ratio_egg() {
  return FourierCurve(coeffs({0, 1, 0.15}), coeffs({0, 0, 0}), coeffs({0, 0, 0.01}),
                      coeffs({0, 0.8, 0}), "egg");
}

std::vector<std::pair<std::string, FourierCurve>> all() {
  return {
      {"circle", circle()},
      {"ellipse", ellipse()},
      {"pe", perturbed_ellipse()},
      {"convex", convex_example()},
      {"symmetric-oval", symmetric_oval()},
      {"c2", rosette(2)},
      {"c3", rosette(3)},
      {"c4", rosette(4)},
      {"w1", w1()},
      {"w2", w2()},
      {"infl8", eight_inflexions()},
      {"egg", ratio_egg()},
  };
}

FourierCurve by_name(const std::string& name) {
  for (auto& [n, c] : all())
    if (n == name) return c;
  fail(Errc::InvalidInput, "unknown fixture: " + name);
}

}  // namespace fixtures

FourierCurve random_generic_curve(std::mt19937_64& rng, int max_degree) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int attempt = 0; attempt < 256; ++attempt) {
    ArrayXd xc = ArrayXd::Zero(max_degree + 1), xs = xc, yc = xc, ys = xc;
    xc[1] = 1.0 + 0.2 * gauss(rng);
    ys[1] = 1.0 + 0.2 * gauss(rng);
    xs[1] = 0.15 * gauss(rng);
    yc[1] = 0.15 * gauss(rng);
    for (int k = 2; k <= max_degree; ++k) {
      const double s = 0.35 / (k * k);
      xc[k] = s * gauss(rng);
      xs[k] = s * gauss(rng);
      yc[k] = s * gauss(rng);
      ys[k] = s * gauss(rng);
    }
    try {
      FourierCurve curve(xc, xs, yc, ys, "random");
      if (!genericity_check(curve).generic()) continue;
      return curve;
    } catch (const Error&) {
      continue;
    }
  }
  fail(Errc::InternalError, "rejection sampling failed to produce a generic curve");
}

}  // namespace equidist
