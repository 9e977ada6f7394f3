#pragma once

#include <string>
#include <utility>
#include <vector>

#include "equidist/parallel.hpp"

namespace equidist {

// lambda = 1/2 glues each pair of arcs once; any other lambda not in {0, 1}
// glues each pair twice (once per row order).
enum class LambdaClass { Half, Generic };

using IndexPair = std::pair<int, int>;  // (top, bottom) indices into S_M

// Two rows of parallel-point indices walked in lockstep; consecutive pairs
// are joined by two arcs from one set of parallel arcs, traversed with equal
// tangent direction throughout. The image of the whole word under the
// lambda-point map is one smooth branch of the equidistant.
struct GluingScheme {
  LambdaClass lambda_class = LambdaClass::Half;
  std::vector<IndexPair> pairs;
  bool closed = false;     // closed branch: word returns to its first pair (or its swap)
  bool on_shell = false;   // open branch joining two inflexion points: equal-index end pairs

  int step_count() const { return static_cast<int>(pairs.size()) - 1; }
};

// One glueing step between consecutive pairs, resolved against the structure.
struct SchemeStep {
  int arc_top = -1, arc_bottom = -1;
  bool top_along_curve = true;     // top row moves in the curve direction
  bool bottom_along_curve = true;
  bool from_paper_start = true;    // both rows enter at the low-direction end
};

SchemeStep derive_step(const ParallelStructure& S, const IndexPair& from, const IndexPair& to);

// Appends the unique admissible next pair. Throws NonGenericBranching when
// the continuation is ambiguous; returns false when the scheme is maximal.
bool prolong(GluingScheme& scheme, const ParallelStructure& S);

// All maximal glueing schemes for the given lambda class, canonicalized
// (lexicographically minimal rotation/reflection). Consumes every admissible
// arc pair exactly once (twice for Generic); throws ArcAccountingMismatch if
// the totals disagree with the per-set pair counts.
std::vector<GluingScheme> maximal_schemes(const ParallelStructure& S, LambdaClass cls);

struct BranchPrediction {
  bool rotation_half_integer = false;
  bool cusp_parity_odd = false;      // meaningful for closed branches
  bool cusp_parity_known = true;     // false for on-shell branches (endpoint types decide)
  int inflexion_count = 0;
  bool on_shell = false;
  int endpoint_top = -1, endpoint_bottom = -1;  // S_M indices of the two inflexions when on shell
};

BranchPrediction predict(const GluingScheme& scheme, const ParallelStructure& S);

// Two-row rendering, e.g. "p0-p1-p0 / p1-p0-p1".
std::string scheme_to_string(const GluingScheme& scheme);

}  // namespace equidist
