#pragma once

#include <vector>

#include "equidist/fourier_curve.hpp"

namespace equidist {

struct AnalysisOptions {
  int samples = 4096;             // dense grid size for bracketing
  double root_width = 1e-10;      // bisection target width
  double simple_root_tol = 1e-6;  // |kappa'| below this at a root is degenerate
  double angle_coincidence_tol = 1e-6;  // rad, mod pi
};

struct InflexionPoint {
  double t = 0.0;
  Vec2 position;
  int contact_order = 2;   // 2 = ordinary
  int kappa_prime_sign = 0;  // sign of d(kappa)/dt across the root
};

// All simple roots of the signed curvature on [0, 2pi), refined by
// bisection + Newton polish. Throws DegenerateInflexion when a root fails
// the simplicity test, InternalError if the count comes out odd.
std::vector<InflexionPoint> inflexion_points(const FourierCurve& curve,
                                             const AnalysisOptions& opts = {});

// (theta(2pi) - theta(0)) / 2pi for the continuous tangent-angle lift;
// guarded rounding, LiftInconsistent when the residual exceeds 0.01.
int rotation_number(const FourierCurve& curve, const AnalysisOptions& opts = {});

struct GenericityReport {
  bool regular = true;
  double min_speed = 0.0;
  bool degenerate_inflexion = false;     // non-simple kappa root
  bool extremum_degenerate = false;      // angle-function extremum with tiny second derivative
  bool tangent_coincidence = false;      // two inflexion tangents parallel mod pi
  bool centrally_symmetric = false;      // kappa(a)/kappa(b) == 1 degeneracy
  std::vector<std::string> notes;

  bool generic() const {
    return regular && !degenerate_inflexion && !extremum_degenerate && !tangent_coincidence &&
           !centrally_symmetric;
  }
};

GenericityReport genericity_check(const FourierCurve& curve, const AnalysisOptions& opts = {});

struct SelfIntersection {
  double t1 = 0.0, t2 = 0.0;  // t1 < t2
  Vec2 position;
};

// Transversal self-intersections, found on a dense polyline and refined by
// Newton on f(u) - f(v) = 0.
std::vector<SelfIntersection> self_intersections(const FourierCurve& curve, int samples = 2048);

}  // namespace equidist
