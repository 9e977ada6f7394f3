#pragma once

#include <optional>

#include "equidist/gluing.hpp"

namespace equidist {

// One traced point of a branch: the source pair (s, t), its image under the
// lambda-point map, and the curvature bookkeeping. kappa_b carries the
// opposite-direction sign convention: it is negated when the tangent lifts at
// the pair differ by an even multiple of pi.
struct BranchNode {
  double s = 0.0, t = 0.0;  // source parameters in [0, 2pi)
  Vec2 pos;
  double psi = 0.0;      // tangent line direction of the node, in [0, pi)
  double theta_a = 0.0;  // cumulative top-row lift along the trace
  double kappa_a = 0.0;
  double kappa_b = 0.0;  // opposite-direction convention applied
  double margin = 0.0;   // (1 - lambda) kappa_a - lambda kappa_b; zero at cusps
  double kappa_e = 0.0;  // curvature of the branch (magnitude from the pair formula)
  int step = 0;          // scheme step this node belongs to
  double ell = 0.0;      // distance traveled in tangent direction within the step
  int pair_index = -1;   // >= 0 when the node sits on a scheme pair
  bool is_cusp = false;
  bool is_inflexion = false;
};

struct Cusp {
  double s = 0.0, t = 0.0;
  Vec2 pos;
};

struct BranchInflexion {
  double s = 0.0, t = 0.0;
  Vec2 pos;
  int node = 0;
};

struct Branch {
  double lambda = 0.5;
  GluingScheme scheme;
  bool parity_odd = false;  // rows' lifts differ by an odd multiple of pi
  std::vector<BranchNode> nodes;
  std::vector<Cusp> cusps;
  std::vector<BranchInflexion> inflexions;
  bool closed = false;
  bool on_shell = false;
  bool degenerate_point = false;           // e.g. Wigner caustic of a symmetric oval
  std::optional<int> rotation_twice;       // 2 * rotation number, closed branches only

  double diameter() const;
};

struct TraceControl {
  double max_dpsi = kPi / 256.0;
  double cusp_param_width = 1e-10;
  double solve_tol = 1e-13;
};

// Image of a maximal glueing scheme under the lambda-point map, sampled with
// bounded tangent-direction steps. Detection passes are separate.
Branch trace_branch(const ParallelStructure& S, const GluingScheme& scheme, double lambda,
                    const TraceControl& ctrl = {});

// Roots of the margin along the branch, located by sign change and refined
// by bisection in the direction offset. Cusps are recorded and duplicated
// into the node polyline. Throws TangentialRoot when the margin grazes zero.
void detect_cusps(const ParallelStructure& S, Branch& branch, const TraceControl& ctrl = {});

// Branch inflexions: one per scheme pair containing an inflexion of the
// curve (endpoints of on-shell Wigner branches excluded).
void detect_inflexions(const ParallelStructure& S, Branch& branch);

// Curvature of the branch at a regular node. Throws AtCusp near the margin's
// zero set.
double branch_curvature(const BranchNode& node, double lambda);

// Winding number of the transported normal along a closed branch, as a
// multiple of 1/2.
int branch_rotation_twice(const Branch& branch);

// trace + detect passes + rotation for every maximal scheme of the class
// selected by lambda. For lambda in {0, 1} the equidistant is the curve
// itself, returned as a single pseudo-branch.
std::vector<Branch> full_equidistant(const ParallelStructure& S, double lambda,
                                     const TraceControl& ctrl = {});

// Measured tangent direction at a node from nearby re-solved branch points
// (step h in direction offset); for validating that branch tangents are
// parallel to the curve's tangents at the source pair.
double node_tangent_direction_fd(const ParallelStructure& S, const Branch& branch, int node_index,
                                 double h = 1e-5);

// Menger (three-point) curvature of the traced polyline around a node, with
// the sample points re-solved at +-h in direction offset.
double node_curvature_fd(const ParallelStructure& S, const Branch& branch, int node_index,
                         double h = 1e-3);

// Centre symmetry set support.
struct CssNode {
  double s = 0.0, t = 0.0;
  Vec2 q;
  Vec2 chord_dir;        // unit vector along the chord (tangent to the CSS)
  double kappa_css = 0.0;
  bool near_pole = false;
};

struct CssCurve {
  std::vector<std::vector<CssNode>> segments;  // split at curvature poles
  std::vector<Vec2> endpoint_markers;          // inflexion tangency endpoints
  bool degenerate_point = false;
};

CssCurve css_curve(const ParallelStructure& S, const TraceControl& ctrl = {});

// Cusps of the CSS: reversals of the motion along the chord direction.
int css_cusp_count(const CssCurve& css);

enum class EndpointType { SingularEndpoint, C1RegularEndpoint };
enum class ArcSide { Forward, Backward };

struct EndpointClassification {
  EndpointType type = EndpointType::C1RegularEndpoint;
  double ratio_derivative_limit = 0.0;  // lim d/ds kappa(s)/kappa(t(s))
  double closed_form = 0.0;             // -2 F4 / (3 F3) in the tangent frame
  double ratio_limit = 0.0;             // kappa ratio at the smallest step, near -1
};

// Classifies the junction of an on-shell Wigner branch with the curve arc on
// the given side of an ordinary inflexion.
EndpointClassification classify_onshell_endpoint(const ParallelStructure& S, double inflexion_t,
                                                 ArcSide side);

}  // namespace equidist
