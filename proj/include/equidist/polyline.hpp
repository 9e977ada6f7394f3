#pragma once

#include <vector>

#include "equidist/equidistant.hpp"

namespace equidist {

// A closed polyline treated as a curve in its own right: tangent directions
// come from the segments, with a continuous mod-pi lift (the direction of an
// unoriented line is continuous through cusps). Used to re-ingest a traced
// branch and compute its equidistants independently of the source pairing.
class PolylineCurve {
 public:
  // Nodes of a closed polyline (first node not repeated). The direction lift
  // must be monotone up to tiny jitter; equidistants of convex curves
  // satisfy this through their cusps.
  explicit PolylineCurve(std::vector<Vec2> nodes);

  static PolylineCurve from_branch(const Branch& branch);
  static PolylineCurve from_curve(const FourierCurve& curve, int samples = 2048);

  // Total increase of the direction lift over one loop (multiple of pi).
  double lift_span() const { return lift_.back() - lift_.front(); }
  // Point at a given lift level; the lift is periodic with period lift_span.
  Vec2 point_at_lift(double level) const;
  double lift_start() const { return lift_.front(); }

  // Points of the lambda-equidistant via the level pairing: matches each
  // direction level with the level pi away.
  std::vector<Vec2> equidistant_points(double lambda, int samples_out = 2048) const;

  const std::vector<Vec2>& nodes() const { return nodes_; }

 private:
  std::vector<Vec2> nodes_;   // closed: nodes_.front() duplicated at the back
  std::vector<double> lift_;  // direction lift per node (last = first + span)
};

// Symmetric Hausdorff distance between point sets, grid-bucketed nearest
// neighbour search.
double hausdorff_distance(const std::vector<Vec2>& a, const std::vector<Vec2>& b);

// Largest gap between consecutive polyline nodes (for spacing-scaled tolerances).
double max_node_spacing(const std::vector<Vec2>& pts);

std::vector<Vec2> branch_points(const Branch& branch);
std::vector<Vec2> branches_points(const std::vector<Branch>& branches);

}  // namespace equidist
