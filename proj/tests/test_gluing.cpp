#include <doctest.h>

#include <set>

#include "equidist/fixtures.hpp"
#include "equidist/gluing.hpp"

using namespace equidist;

namespace {

long expected_arc_total(const ParallelStructure& S, LambdaClass cls) {
  long total = 0;
  for (const auto& set : S.phi_sets) {
    const long sz = static_cast<long>(set.size());
    total += sz * (sz - 1) / 2;
  }
  return cls == LambdaClass::Generic ? 2 * total : total;
}

long scheme_arc_total(const std::vector<GluingScheme>& schemes) {
  long total = 0;
  for (const auto& s : schemes) total += s.step_count();
  return total;
}

}  // namespace

TEST_CASE("convex curve: one scheme per class, in the expected form") {
  const ParallelStructure S = build_parallel_structure(fixtures::perturbed_ellipse());

  const auto half = maximal_schemes(S, LambdaClass::Half);
  REQUIRE(half.size() == 1);
  CHECK(half[0].closed);
  CHECK(scheme_to_string(half[0]) == "p0-p1 / p1-p0");

  const auto gen = maximal_schemes(S, LambdaClass::Generic);
  REQUIRE(gen.size() == 1);
  CHECK(gen[0].closed);
  CHECK(scheme_to_string(gen[0]) == "p0-p1-p0 / p1-p0-p1");
}

TEST_CASE("rosette scheme counts: n half, 2n-1 generic") {
  for (int n : {2, 3, 4}) {
    const ParallelStructure S = build_parallel_structure(fixtures::rosette(n));
    const auto half = maximal_schemes(S, LambdaClass::Half);
    const auto gen = maximal_schemes(S, LambdaClass::Generic);
    CHECK(static_cast<int>(half.size()) == n);
    CHECK(static_cast<int>(gen.size()) == 2 * n - 1);
    CHECK(scheme_arc_total(half) == expected_arc_total(S, LambdaClass::Half));
    CHECK(scheme_arc_total(gen) == expected_arc_total(S, LambdaClass::Generic));
    for (const auto& s : half) CHECK(s.closed);
    for (const auto& s : gen) CHECK(s.closed);
  }
}

TEST_CASE("w1 schemes: counts, on-shell structure, arc accounting") {
  const ParallelStructure S = build_parallel_structure(fixtures::w1());

  const auto half = maximal_schemes(S, LambdaClass::Half);
  REQUIRE(half.size() == 2);
  int on_shell = 0;
  for (const auto& s : half) on_shell += s.on_shell;
  CHECK(on_shell == 1);
  CHECK(scheme_arc_total(half) == 7);  // C(2,2) + C(4,2)
  CHECK(expected_arc_total(S, LambdaClass::Half) == 7);

  const auto gen = maximal_schemes(S, LambdaClass::Generic);
  REQUIRE(gen.size() == 2);
  for (const auto& s : gen) CHECK(s.closed);
  CHECK(scheme_arc_total(gen) == 14);

  // the on-shell scheme joins the two inflexions, each appearing once
  for (const auto& s : half) {
    if (!s.on_shell) continue;
    const int a = s.pairs.front().first, b = s.pairs.back().first;
    CHECK(a != b);
    CHECK(S.points[a].is_inflexion);
    CHECK(S.points[b].is_inflexion);
  }
}

TEST_CASE("every inflexion ends exactly one on-shell wigner scheme") {
  for (const char* name : {"w1", "infl8"}) {
    const ParallelStructure S = build_parallel_structure(fixtures::by_name(name));
    const auto half = maximal_schemes(S, LambdaClass::Half);
    std::multiset<int> endpoints;
    int shells = 0;
    for (const auto& s : half) {
      if (!s.on_shell) continue;
      ++shells;
      endpoints.insert(s.pairs.front().first);
      endpoints.insert(s.pairs.back().first);
    }
    int n_infl = 0;
    for (int k = 0; k < S.point_count(); ++k)
      if (S.points[k].is_inflexion) {
        ++n_infl;
        CHECK(endpoints.count(k) == 1);
      }
    CHECK(shells == n_infl / 2);
  }
}

TEST_CASE("on-shell generic schemes close through both inflexions palindromically") {
  const ParallelStructure S = build_parallel_structure(fixtures::w1());
  const auto gen = maximal_schemes(S, LambdaClass::Generic);
  bool found = false;
  for (const auto& s : gen) {
    // the inflexion-passing branch holds two equal-index pairs
    std::vector<size_t> eq;
    for (size_t i = 0; i + 1 < s.pairs.size(); ++i)
      if (s.pairs[i].first == s.pairs[i].second) eq.push_back(i);
    if (eq.size() != 2) continue;
    found = true;
    CHECK(S.points[s.pairs[eq[0]].first].is_inflexion);
    CHECK(S.points[s.pairs[eq[1]].first].is_inflexion);
    // mirror symmetry: walking out of one inflexion forwards and backwards
    // visits swapped pairs
    const size_t q = s.pairs.size() - 1;  // cyclic length
    const size_t c = eq[0];
    for (size_t d = 1; d < q / 2; ++d) {
      const IndexPair fwd = s.pairs[(c + d) % q];
      const IndexPair bwd = s.pairs[(c + q - d) % q];
      CHECK(fwd.first == bwd.second);
      CHECK(fwd.second == bwd.first);
    }
  }
  CHECK(found);
}

TEST_CASE("prolongation is unique and reproduces the maximal scheme") {
  const ParallelStructure S = build_parallel_structure(fixtures::w1());
  for (LambdaClass cls : {LambdaClass::Half, LambdaClass::Generic}) {
    for (const auto& maximal : maximal_schemes(S, cls)) {
      // restart from the first two pairs and prolong to the end
      GluingScheme probe;
      probe.lambda_class = cls;
      probe.pairs = {maximal.pairs[0], maximal.pairs[1]};
      while (prolong(probe, S)) {
      }
      CHECK(probe.pairs.size() == maximal.pairs.size());
      CHECK(probe.pairs == maximal.pairs);
    }
  }
}

TEST_CASE("predictions: convex parity and rotation classes") {
  const ParallelStructure S = build_parallel_structure(fixtures::perturbed_ellipse());
  const auto half = maximal_schemes(S, LambdaClass::Half);
  const BranchPrediction ph = predict(half[0], S);
  CHECK(ph.cusp_parity_known);
  CHECK(ph.cusp_parity_odd);
  CHECK(ph.rotation_half_integer);
  CHECK(ph.inflexion_count == 0);

  const auto gen = maximal_schemes(S, LambdaClass::Generic);
  const BranchPrediction pg = predict(gen[0], S);
  CHECK(!pg.cusp_parity_odd);
  CHECK(!pg.rotation_half_integer);
  CHECK(pg.inflexion_count == 0);
}

TEST_CASE("predictions: rosette odd-cusp branches") {
  for (int n : {2, 3}) {
    const ParallelStructure S = build_parallel_structure(fixtures::rosette(n));
    int odd = 0;
    for (const auto& s : maximal_schemes(S, LambdaClass::Half)) {
      const BranchPrediction p = predict(s, S);
      REQUIRE(p.cusp_parity_known);
      odd += p.cusp_parity_odd;
    }
    CHECK(odd == (n % 2 == 1 ? 1 : 0));
    for (const auto& s : maximal_schemes(S, LambdaClass::Generic))
      CHECK(!predict(s, S).cusp_parity_odd);
  }
}

TEST_CASE("predictions: w1 on-shell inflexion counts") {
  const ParallelStructure S = build_parallel_structure(fixtures::w1());
  // wigner: the on-shell branch predicts 2 inflexions (endpoints excluded)
  for (const auto& s : maximal_schemes(S, LambdaClass::Half)) {
    const BranchPrediction p = predict(s, S);
    if (s.on_shell) {
      CHECK(!p.cusp_parity_known);
      CHECK(p.inflexion_count == 2);
    } else {
      CHECK(p.inflexion_count == 2);
    }
  }
  // generic: {4, 6}
  std::vector<int> counts;
  for (const auto& s : maximal_schemes(S, LambdaClass::Generic))
    counts.push_back(predict(s, S).inflexion_count);
  std::sort(counts.begin(), counts.end());
  CHECK(counts == std::vector<int>({4, 6}));
}

TEST_CASE("canonical schemes are stable across repeated enumeration") {
  const ParallelStructure S = build_parallel_structure(fixtures::rosette(3));
  const auto a = maximal_schemes(S, LambdaClass::Generic);
  const auto b = maximal_schemes(S, LambdaClass::Generic);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].pairs == b[i].pairs);
}

TEST_CASE("random curves satisfy the arc accounting identity") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 8; ++i) {
    const FourierCurve c = random_generic_curve(rng);
    const ParallelStructure S = build_parallel_structure(c, 2048);
    // maximal_schemes throws ArcAccountingMismatch on violation
    const auto half = maximal_schemes(S, LambdaClass::Half);
    const auto gen = maximal_schemes(S, LambdaClass::Generic);
    CHECK(scheme_arc_total(half) == expected_arc_total(S, LambdaClass::Half));
    CHECK(scheme_arc_total(gen) == expected_arc_total(S, LambdaClass::Generic));
  }
}
