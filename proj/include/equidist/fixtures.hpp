#pragma once

#include <random>
#include <vector>

#include "equidist/fourier_curve.hpp"

namespace equidist {

// Built-in test curves. Coefficients were tuned offline and are verified by
// the checks in the verification harness (rotation numbers, inflexion
// counts, genericity).
namespace fixtures {

FourierCurve circle(double radius = 1.0, bool positive = true);
FourierCurve ellipse(double a = 2.0, double b = 1.0);
// convex, not centrally symmetric; its Wigner caustic has exactly 3 cusps
FourierCurve perturbed_ellipse();
// convex genericity example: x = 2 cos t + 0.1 cos 2t, y = sin t
FourierCurve convex_example();
// centrally symmetric oval with odd harmonics only
FourierCurve symmetric_oval();
// curvature has a double root at t = pi
FourierCurve degenerate_inflexion_curve();
// rotation number n, non-vanishing curvature; n in {2, 3, 4}
FourierCurve rosette(int n);
// rotation 1, exactly two inflexions, dent arc with small rotation
FourierCurve w1();
// rotation 2, exactly two inflexions
FourierCurve w2();
// eight ordinary inflexions
FourierCurve eight_inflexions();
// convex egg whose pair curvature ratio sweeps through [2, 3]
FourierCurve ratio_egg();

std::vector<std::pair<std::string, FourierCurve>> all();
FourierCurve by_name(const std::string& name);

}  // namespace fixtures

// Random curve with harmonics up to max_degree and coefficient decay 1/k^2,
// rejection-sampled until it passes the genericity checks.
FourierCurve random_generic_curve(std::mt19937_64& rng, int max_degree = 6);

}  // namespace equidist
