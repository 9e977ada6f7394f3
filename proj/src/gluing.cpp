#include "equidist/gluing.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace equidist {

namespace {

struct Candidate {
  int arc_top, arc_bottom;
  IndexPair next;
};

int other_end(const ParallelArc& arc, int k) { return arc.lo == k ? arc.hi : arc.lo; }

// Admissible continuations out of `at`: pick one incident arc per row, both
// from the same set of parallel arcs, both entered at the same direction end.
template <typename Avail>
std::vector<Candidate> continuations(const ParallelStructure& S, const IndexPair& at,
                                     Avail&& available) {
  std::vector<Candidate> out;
  const auto [ta1, ta2] = S.incident_arcs(at.first);
  const auto [ba1, ba2] = S.incident_arcs(at.second);
  for (int at_arc : {ta1, ta2}) {
    for (int bt_arc : {ba1, ba2}) {
      if (at_arc == bt_arc) continue;
      const ParallelArc& A = S.arcs[at_arc];
      const ParallelArc& B = S.arcs[bt_arc];
      if (A.phi_index != B.phi_index) continue;
      const bool a_start = A.paper_start() == at.first;
      const bool b_start = B.paper_start() == at.second;
      if (a_start != b_start) continue;
      if (!available(at_arc, bt_arc)) continue;
      out.push_back({at_arc, bt_arc,
                     IndexPair{other_end(A, at.first), other_end(B, at.second)}});
    }
  }
  return out;
}

IndexPair swapped(const IndexPair& p) { return {p.second, p.first}; }

// Lexicographically minimal representative over the scheme's symmetries:
// direction reversal, the row swap for lambda = 1/2, and rotations. A word
// closed by recurrence of its first pair is an ordinary cycle; a Wigner
// word closed by the swapped pair is periodic only on the swap-glued double
// cover, so its rotations are read off that extension.
void canonicalize(GluingScheme& s) {
  std::vector<std::vector<IndexPair>> forms;
  auto add_direction_forms = [&](const std::vector<IndexPair>& seq) {
    forms.push_back(seq);
    if (s.lambda_class == LambdaClass::Half) {
      auto sw = seq;
      for (auto& p : sw) p = swapped(p);
      forms.push_back(sw);
    }
  };
  const size_t q = s.pairs.size();
  const bool swap_closed = s.closed && q > 1 && s.pairs.front() == swapped(s.pairs.back()) &&
                           s.pairs.front() != s.pairs.back();
  if (swap_closed) {
    std::vector<IndexPair> word(s.pairs.begin(), s.pairs.end() - 1);
    for (int rev = 0; rev < 2; ++rev) {
      std::vector<IndexPair> ext;
      for (const auto& p : word) ext.push_back(p);
      for (const auto& p : word) ext.push_back(swapped(p));
      for (size_t r = 0; r < ext.size(); ++r) {
        std::vector<IndexPair> rot(q);
        for (size_t i = 0; i < q; ++i) rot[i] = ext[(r + i) % ext.size()];
        forms.push_back(rot);
      }
      std::reverse(word.begin(), word.end());
      for (auto& p : word) p = swapped(p);  // reversing swaps the gluing end
    }
  } else if (s.closed && q > 1) {
    std::vector<IndexPair> cyc(s.pairs.begin(), s.pairs.end() - 1);
    for (int rev = 0; rev < 2; ++rev) {
      for (size_t r = 0; r < cyc.size(); ++r) {
        std::vector<IndexPair> rot(cyc.size() + 1);
        for (size_t i = 0; i < cyc.size(); ++i) rot[i] = cyc[(r + i) % cyc.size()];
        rot[cyc.size()] = rot[0];
        add_direction_forms(rot);
      }
      std::reverse(cyc.begin(), cyc.end());
    }
  } else {
    add_direction_forms(s.pairs);
    auto rev = s.pairs;
    std::reverse(rev.begin(), rev.end());
    add_direction_forms(rev);
  }
  s.pairs = *std::min_element(forms.begin(), forms.end());
}

void classify_ends(GluingScheme& s, const ParallelStructure& S) {
  const IndexPair& front = s.pairs.front();
  const IndexPair& back = s.pairs.back();
  s.closed = (front == back) || (s.lambda_class == LambdaClass::Half && front == swapped(back));
  s.on_shell = !s.closed && front.first == front.second && back.first == back.second &&
               S.points[front.first].is_inflexion && S.points[back.first].is_inflexion;
  if (!s.closed && !s.on_shell)
    fail(Errc::InternalError, "maximal scheme is neither closed nor on shell");
}

}  // namespace

SchemeStep derive_step(const ParallelStructure& S, const IndexPair& from, const IndexPair& to) {
  const int n = S.arc_count();
  auto resolve = [&](int a, int b, int* arc, bool* along) {
    if ((a + 1) % n == b) {
      *arc = a;
      *along = true;
    } else if ((b + 1) % n == a) {
      *arc = b;
      *along = false;
    } else {
      fail(Errc::InternalError, "scheme rows are not adjacent in the parallel sequence");
    }
  };
  SchemeStep st;
  resolve(from.first, to.first, &st.arc_top, &st.top_along_curve);
  resolve(from.second, to.second, &st.arc_bottom, &st.bottom_along_curve);
  const ParallelArc& A = S.arcs[st.arc_top];
  const ParallelArc& B = S.arcs[st.arc_bottom];
  if (A.phi_index != B.phi_index)
    fail(Errc::InternalError, "scheme step uses arcs from different sets");
  const bool a_start = A.paper_start() == from.first;
  const bool b_start = B.paper_start() == from.second;
  if (a_start != b_start) fail(Errc::InternalError, "scheme step enters arcs at opposite ends");
  st.from_paper_start = a_start;
  return st;
}

bool prolong(GluingScheme& scheme, const ParallelStructure& S) {
  if (scheme.pairs.size() < 2) fail(Errc::InvalidInput, "cannot prolong a bare pair");
  // Arc pairs already used by this scheme are not admissible again.
  std::set<std::pair<int, int>> used;
  for (size_t i = 0; i + 1 < scheme.pairs.size(); ++i) {
    const SchemeStep st = derive_step(S, scheme.pairs[i], scheme.pairs[i + 1]);
    used.insert({st.arc_top, st.arc_bottom});
    if (scheme.lambda_class == LambdaClass::Half) used.insert({st.arc_bottom, st.arc_top});
  }
  auto available = [&](int a, int b) { return !used.count({a, b}); };
  const auto cands = continuations(S, scheme.pairs.back(), available);
  if (cands.empty()) return false;
  if (cands.size() > 1) {
    // Distinct candidates that are the same unordered arc set (possible only
    // at an equal-index pair) are one continuation.
    bool all_same = true;
    for (const auto& c : cands)
      if (!((c.arc_top == cands[0].arc_top && c.arc_bottom == cands[0].arc_bottom) ||
            (c.arc_top == cands[0].arc_bottom && c.arc_bottom == cands[0].arc_top)))
        all_same = false;
    if (!all_same)
      fail(Errc::NonGenericBranching, "scheme admits two distinct prolongations");
  }
  scheme.pairs.push_back(cands[0].next);
  return true;
}

std::vector<GluingScheme> maximal_schemes(const ParallelStructure& S, LambdaClass cls) {
  // Availability of glueing arcs. For Half an unordered arc pair is one
  // token; for Generic each ordered pair is its own token.
  std::set<std::pair<int, int>> avail;
  long expected = 0;
  for (const auto& set : S.phi_sets) {
    const long sz = static_cast<long>(set.size());
    expected += sz * (sz - 1) / 2;
    for (size_t i = 0; i < set.size(); ++i)
      for (size_t j = 0; j < set.size(); ++j) {
        if (i == j) continue;
        if (cls == LambdaClass::Half && set[i] > set[j]) continue;
        avail.insert({set[i], set[j]});
      }
  }
  if (cls == LambdaClass::Generic) expected *= 2;

  auto available = [&](int a, int b) {
    if (cls == LambdaClass::Half) return avail.count({std::min(a, b), std::max(a, b)}) > 0;
    return avail.count({a, b}) > 0;
  };
  auto consume = [&](int a, int b) {
    if (cls == LambdaClass::Half)
      avail.erase({std::min(a, b), std::max(a, b)});
    else
      avail.erase({a, b});
  };

  long total_steps = 0;
  std::vector<GluingScheme> out;

  auto grow = [&](GluingScheme& s) {
    for (;;) {
      auto cands = continuations(S, s.pairs.back(), available);
      if (cands.empty()) break;
      std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
        return std::tie(a.arc_top, a.arc_bottom) < std::tie(b.arc_top, b.arc_bottom);
      });
      const Candidate& c = cands[0];
      consume(c.arc_top, c.arc_bottom);
      s.pairs.push_back(c.next);
      ++total_steps;
    }
    // extend at the front as well (seeds may land mid-word)
    for (;;) {
      std::reverse(s.pairs.begin(), s.pairs.end());
      auto cands = continuations(S, s.pairs.back(), available);
      std::reverse(s.pairs.begin(), s.pairs.end());
      if (cands.empty()) break;
      std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
        return std::tie(a.arc_top, a.arc_bottom) < std::tie(b.arc_top, b.arc_bottom);
      });
      const Candidate& c = cands[0];
      consume(c.arc_top, c.arc_bottom);
      s.pairs.insert(s.pairs.begin(), c.next);
      ++total_steps;
    }
    classify_ends(s, S);
    canonicalize(s);
    out.push_back(s);
  };

  // Inflexion-anchored words first: every inflexion is the end of exactly
  // one branch per class.
  for (int k = 0; k < S.point_count(); ++k) {
    if (!S.points[k].is_inflexion) continue;
    for (;;) {
      auto cands = continuations(S, {k, k}, available);
      if (cands.empty()) break;
      std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
        return std::tie(a.arc_top, a.arc_bottom) < std::tie(b.arc_top, b.arc_bottom);
      });
      GluingScheme s;
      s.lambda_class = cls;
      s.pairs = {{k, k}, cands[0].next};
      consume(cands[0].arc_top, cands[0].arc_bottom);
      ++total_steps;
      grow(s);
    }
  }
  // Remaining glueing arcs seed closed words.
  while (!avail.empty()) {
    const auto [a, b] = *avail.begin();
    const ParallelArc& A = S.arcs[a];
    const ParallelArc& B = S.arcs[b];
    GluingScheme s;
    s.lambda_class = cls;
    s.pairs = {{A.paper_start(), B.paper_start()}, {A.paper_end(), B.paper_end()}};
    consume(a, b);
    ++total_steps;
    grow(s);
  }

  if (total_steps != expected)
    fail(Errc::ArcAccountingMismatch,
         "glueing consumed " + std::to_string(total_steps) + " arcs, expected " +
             std::to_string(expected));

  std::sort(out.begin(), out.end(),
            [](const GluingScheme& a, const GluingScheme& b) { return a.pairs < b.pairs; });
  return out;
}

BranchPrediction predict(const GluingScheme& scheme, const ParallelStructure& S) {
  BranchPrediction pred;
  pred.on_shell = scheme.on_shell;
  if (scheme.on_shell) {
    pred.endpoint_top = scheme.pairs.front().first;
    pred.endpoint_bottom = scheme.pairs.back().first;
    pred.cusp_parity_known = false;
  }

  const size_t q = scheme.pairs.size();
  const size_t count_to = scheme.closed ? q - 1 : q;
  int infl = 0;
  for (size_t i = 0; i < count_to; ++i) {
    if (scheme.on_shell && scheme.lambda_class == LambdaClass::Half &&
        (i == 0 || i == q - 1))
      continue;  // endpoints are curve points, not branch inflexions
    const auto& [k, l] = scheme.pairs[i];
    if (S.points[k].is_inflexion || S.points[l].is_inflexion) ++infl;
  }
  pred.inflexion_count = infl;

  if (scheme.closed) {
    bool odd = false;
    bool half_rot = false;
    if (scheme.lambda_class == LambdaClass::Half &&
        scheme.pairs.front() == swapped(scheme.pairs.back()) &&
        scheme.pairs.front() != scheme.pairs.back()) {
      const auto& [k, l] = scheme.pairs.front();
      // normals oppose exactly when the lift levels differ by an odd step
      const int parity = (S.points[k].level_index - S.points[l].level_index) & 1;
      odd = parity != 0;
      half_rot = odd;
    }
    pred.cusp_parity_odd = odd;
    pred.rotation_half_integer = half_rot;
  }
  return pred;
}

std::string scheme_to_string(const GluingScheme& scheme) {
  std::string top, bottom;
  for (size_t i = 0; i < scheme.pairs.size(); ++i) {
    if (i) {
      top += "-";
      bottom += "-";
    }
    top += "p" + std::to_string(scheme.pairs[i].first);
    bottom += "p" + std::to_string(scheme.pairs[i].second);
  }
  return top + " / " + bottom;
}

}  // namespace equidist
