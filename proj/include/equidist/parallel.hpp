#pragma once

#include <vector>

#include "equidist/angle_function.hpp"

namespace equidist {

// One entry of the sequence of parallel points: a parameter whose tangent
// line is parallel to one of the extremal directions (or to the base
// direction when the curve has no inflexions).
struct ParallelPoint {
  double t = 0.0;       // in [0, 2pi)
  double theta = 0.0;   // lift value at t
  int value_index = 0;  // which extremal direction
  int level_index = 0;  // theta = value_rep + level_index * pi
  bool is_inflexion = false;
};

// Arc of the curve between two consecutive parallel points. The lift is
// strictly monotone on it (curvature cannot vanish in the interior), so the
// arc covers one interval of tangent directions exactly once. Its "paper"
// orientation runs with increasing lift.
struct ParallelArc {
  int lo = 0, hi = 0;          // S_M indices; hi = lo+1 mod 2m along the curve
  double t_lo = 0.0, t_hi = 0.0;  // parameter interval, t_hi may exceed 2pi on the wrap arc
  double theta_lo = 0.0, theta_hi = 0.0;
  int phi_index = 0;           // which set of parallel arcs
  bool forward = true;         // true when increasing lift runs lo -> hi

  int paper_start() const { return forward ? lo : hi; }
  int paper_end() const { return forward ? hi : lo; }
  double theta_min() const { return forward ? theta_lo : theta_hi; }
  double theta_max() const { return forward ? theta_hi : theta_lo; }
  double gap() const { return theta_max() - theta_min(); }
};

struct ParallelStructure {
  explicit ParallelStructure(AngleFunction af) : angle(std::move(af)) {}

  AngleFunction angle;
  std::vector<ParallelPoint> points;       // cyclically ordered by t
  std::vector<ParallelArc> arcs;           // arc j joins points j and j+1 mod 2m
  std::vector<std::vector<int>> phi_sets;  // arc indices per set of parallel arcs
  std::vector<double> values;              // extremal directions mod pi, sorted; one pseudo-value if none

  int point_count() const { return static_cast<int>(points.size()); }
  int arc_count() const { return static_cast<int>(arcs.size()); }
  const FourierCurve& curve() const { return angle.curve(); }
  // The two curve arcs incident to parallel point k.
  std::pair<int, int> incident_arcs(int k) const {
    const int n = arc_count();
    return {(k + n - 1) % n, k};
  }
  // Curve parameter of point k, with index taken cyclically: adding 2m to k
  // adds one full period to t.
  double point_param(int k) const;
};

struct ContinuationControl {
  double max_dpsi = kPi / 256.0;  // largest tangent-direction step per node
  double solve_tol = 1e-13;
};

// Stage 1: the sequence of parallel points (S_M). Stage 2: the sets of
// parallel arcs. build_parallel_structure runs both.
ParallelStructure parallel_points(const AngleFunction& angle);
void parallel_arc_sets(ParallelStructure& S);
ParallelStructure build_parallel_structure(const FourierCurve& curve, int samples = 4096,
                                           const AnalysisOptions& opts = {});

struct PairingNode {
  double s = 0.0;    // parameter on the source arc (may exceed 2pi on wrap arcs)
  double t = 0.0;    // parameter on the target arc
  double psi = 0.0;  // common tangent direction, mod pi chart of the source
};

struct ParallelPairing {
  int arc_a = -1, arc_b = -1;
  std::vector<PairingNode> nodes;  // ordered along the arcs' paper orientation
};

// Solve theta(t) = target on an arc (the lift is monotone there).
double solve_on_arc(const ParallelStructure& S, const ParallelArc& arc, double target,
                    double guess = std::numeric_limits<double>::quiet_NaN(),
                    double tol = 1e-13);

// The diffeomorphism between two arcs of one set of parallel arcs, sampled
// with bounded tangent-direction steps. Predictor-corrector: the previous
// node plus a first-order step predicts, a safeguarded Newton on the lift
// corrects.
ParallelPairing pair_continuation(const ParallelStructure& S, int arc_a, int arc_b,
                                  const ContinuationControl& ctrl = {});

// All t' != t with tangent line parallel to the one at t.
std::vector<double> parallel_partners(const ParallelStructure& S, double t);

}  // namespace equidist
