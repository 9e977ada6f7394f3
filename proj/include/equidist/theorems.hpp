#pragma once

#include <string>
#include <vector>

#include "equidist/equidistant.hpp"
#include "equidist/fixtures.hpp"
#include "equidist/polyline.hpp"

namespace equidist {

struct CheckResult {
  std::string name;
  std::string expected;
  std::string observed;
  bool pass = false;
  std::string tolerance;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  void add(const std::string& name, const std::string& expected, const std::string& observed,
           bool pass, const std::string& tolerance = "exact");
  bool all_pass() const;
  void merge(const VerificationReport& other);
};

std::string report_to_json(const VerificationReport& report);
std::string report_summary(const VerificationReport& report);

// --- singular-interval predictions -------------------------------------

struct LambdaInterval {
  double lo = 0.0, hi = 0.0;
  bool unbounded_lo = false, unbounded_hi = false;

  bool contains(double x) const {
    return (unbounded_lo || x >= lo - 1e-12) && (unbounded_hi || x <= hi + 1e-12);
  }
};

struct SingularIntervalPrediction {
  double rho_min = 0.0, rho_max = 0.0;
  bool same_side = false;
  std::vector<LambdaInterval> intervals;
};

// The interval arithmetic alone, from the endpoint curvature ratios.
SingularIntervalPrediction singular_intervals_from_ratios(double rho_min, double rho_max,
                                                          bool same_side);

// Two embedded arcs of one curve, paired by parallel tangents. The second
// arc is the image of the first under the pairing, so only the first arc's
// parameter interval is stored.
struct ArcPairSpec {
  double s_lo = 0.0, s_hi = 0.0;
};

// Verifies the hypotheses (endpoint parallelism, curvature positivity,
// rotation below 1/2, side condition), measures the endpoint curvature
// ratios and predicts the singular lambda intervals. Throws
// HypothesisViolated naming the failing clause.
SingularIntervalPrediction predict_singular_intervals(const ParallelStructure& S,
                                                      const ArcPairSpec& arcs);

// Partner of s on an oval: the unique other parameter with a parallel
// tangent line (solved on the lift).
double oval_partner(const AngleFunction& angle, double s);

// Sign changes of the two-arc singular margin over the arc pair, both row
// orders; >= 1 means the lambda-equidistant of the arc union is singular.
int two_arc_cusp_count(const ParallelStructure& S, const ArcPairSpec& arcs, double lambda,
                       int samples = 512);

// The arc pair of the ratio_egg fixture whose endpoint curvature ratios are
// exactly 2 and 3 (solved at runtime from the frozen bracket).
ArcPairSpec ratio_egg_arcs(const ParallelStructure& S);

// Wigner-caustic cusps of a loop (an arc with equal endpoints and
// non-vanishing curvature): sign changes of the half margin over the loop's
// own parallel pairs.
int loop_wigner_cusp_count(const AngleFunction& angle, double t1, double t2, int samples = 512);

// --- theorem checks -----------------------------------------------------

// Convex curve: Wigner cusp count odd >= 3; generic-lambda counts even; CSS
// count odd, >= 3 and >= the Wigner count.
VerificationReport check_cusp_parity(const ParallelStructure& S,
                                     const std::vector<double>& lambda_grid);

// Hausdorff(E_delta(E_lambda(M)), E_{delta(1-lambda)+lambda(1-delta)}(M))
// below 5x node spacing, with the outer equidistant computed on the
// re-ingested polyline.
VerificationReport check_composition(const ParallelStructure& S, double lambda, double delta);

// Rosette C_n: branch counts, rotation numbers, cusp parities, loop-cusp
// co-branching.
VerificationReport check_rosette(int n);

// W_1: branch counts, inflexion counts, on-shell parity.
VerificationReport check_wn(const ParallelStructure& S);

// Per-branch inflexion totals 2m-2n (half) and 4m-2n (generic), and the
// chord condition on inflexion positions.
VerificationReport check_inflexion_counts(const ParallelStructure& S, double lambda);

// Cusp parity of each on-shell Wigner branch equals the XOR of its endpoint
// classifications; inner-arc inflexion counts are even.
VerificationReport check_onshell_parity(const ParallelStructure& S);

// Randomized mode: invariants over seeded random generic curves.
VerificationReport check_random_invariants(unsigned long long seed, int count,
                                           int samples = 2048);

// Everything on the built-in fixtures.
VerificationReport verify_fixtures(int samples = 4096);

}  // namespace equidist
