#include "equidist/polyline.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace equidist {

namespace {

// wrap into (-pi/2, pi/2]: segment-direction increments mod pi
double wrap_half(double a) {
  a = std::fmod(a, kPi);
  if (a <= -kPi / 2) a += kPi;
  if (a > kPi / 2) a -= kPi;
  return a;
}

}  // namespace

PolylineCurve::PolylineCurve(std::vector<Vec2> nodes) {
  if (nodes.size() < 8) fail(Errc::InvalidInput, "polyline needs at least 8 nodes");
  // drop consecutive duplicates (cusp nodes are stored twice)
  nodes_.clear();
  for (const Vec2& p : nodes)
    if (nodes_.empty() || (p - nodes_.back()).norm() > 1e-14) nodes_.push_back(p);
  if ((nodes_.front() - nodes_.back()).norm() > 1e-9)
    nodes_.push_back(nodes_.front());
  else
    nodes_.back() = nodes_.front();

  const size_t n = nodes_.size();
  lift_.assign(n, 0.0);
  double prev_dir = 0.0;
  for (size_t i = 0; i + 1 < n; ++i) {
    const Vec2 d = nodes_[i + 1] - nodes_[i];
    const double raw = std::atan2(d.y(), d.x());
    if (i == 0) {
      lift_[0] = raw;
      prev_dir = raw;
      continue;
    }
    const double dir = prev_dir + wrap_half(raw - prev_dir);
    lift_[i] = dir;
    prev_dir = dir;
  }
  // close the lift with the first segment's direction one sheet up
  const Vec2 d0 = nodes_[1] - nodes_[0];
  const double raw0 = std::atan2(d0.y(), d0.x());
  lift_[n - 1] = prev_dir + wrap_half(raw0 - prev_dir);
  // snap the span to the nearest multiple of pi
  const double span = lift_[n - 1] - lift_[0];
  const double snapped = kPi * std::round(span / kPi);
  if (std::abs(span - snapped) > 0.2)
    fail(Errc::LiftInconsistent, "polyline direction lift does not close mod pi");
  lift_[n - 1] = lift_[0] + snapped;

  // enforce monotonicity (tiny reversals at cusps are collapsed)
  for (size_t i = 1; i < n; ++i)
    if (lift_[i] < lift_[i - 1]) {
      if (lift_[i - 1] - lift_[i] > 0.05)
        fail(Errc::LiftInconsistent, "polyline direction lift is not monotone");
      lift_[i] = lift_[i - 1];
    }
}

PolylineCurve PolylineCurve::from_branch(const Branch& branch) {
  return PolylineCurve(branch_points(branch));
}

PolylineCurve PolylineCurve::from_curve(const FourierCurve& curve, int samples) {
  std::vector<Vec2> pts(samples);
  for (int i = 0; i < samples; ++i) pts[i] = curve.position(kTwoPi * i / samples);
  return PolylineCurve(std::move(pts));
}

Vec2 PolylineCurve::point_at_lift(double level) const {
  const double span = lift_span();
  double l = std::fmod(level - lift_.front(), span);
  if (l < 0) l += span;
  l += lift_.front();
  auto it = std::upper_bound(lift_.begin(), lift_.end(), l);
  size_t i = (it == lift_.begin()) ? 0 : static_cast<size_t>(it - lift_.begin()) - 1;
  if (i + 1 >= lift_.size()) i = lift_.size() - 2;
  const double a = lift_[i], b = lift_[i + 1];
  const double w = (b > a) ? (l - a) / (b - a) : 0.0;
  return nodes_[i] + w * (nodes_[i + 1] - nodes_[i]);
}

std::vector<Vec2> PolylineCurve::equidistant_points(double lambda, int samples_out) const {
  const double span = lift_span();
  std::vector<Vec2> out;
  out.reserve(samples_out);
  for (int i = 0; i < samples_out; ++i) {
    const double l = lift_.front() + span * i / samples_out;
    const Vec2 a = point_at_lift(l);
    const Vec2 b = point_at_lift(l + kPi);
    out.push_back(lambda * a + (1.0 - lambda) * b);
  }
  return out;
}

double max_node_spacing(const std::vector<Vec2>& pts) {
  double m = 0.0;
  for (size_t i = 0; i + 1 < pts.size(); ++i) m = std::max(m, (pts[i + 1] - pts[i]).norm());
  return m;
}

namespace {

struct Grid {
  double cell;
  Vec2 origin;
  std::unordered_map<long long, std::vector<int>> buckets;
  const std::vector<Vec2>* pts;

  static long long key(int ix, int iy) {
    return (static_cast<long long>(ix) << 32) ^ (static_cast<unsigned int>(iy));
  }
  void build(const std::vector<Vec2>& p, double cell_size) {
    pts = &p;
    cell = cell_size;
    origin = p.front();
    for (const Vec2& q : p) origin = origin.cwiseMin(q);
    for (int i = 0; i < static_cast<int>(p.size()); ++i) {
      const int ix = static_cast<int>((p[i].x() - origin.x()) / cell);
      const int iy = static_cast<int>((p[i].y() - origin.y()) / cell);
      buckets[key(ix, iy)].push_back(i);
    }
  }
  double nearest(const Vec2& q) const {
    const int ix = static_cast<int>((q.x() - origin.x()) / cell);
    const int iy = static_cast<int>((q.y() - origin.y()) / cell);
    double best = std::numeric_limits<double>::infinity();
    for (int ring = 0; ring < 1 << 16; ++ring) {
      // cells at Chebyshev ring r hold points at distance >= (r-1)*cell
      if (best < (ring - 1) * cell) break;
      for (int dx = -ring; dx <= ring; ++dx)
        for (int dy = -ring; dy <= ring; ++dy) {
          if (std::max(std::abs(dx), std::abs(dy)) != ring) continue;
          auto it = buckets.find(key(ix + dx, iy + dy));
          if (it == buckets.end()) continue;
          for (int i : it->second) best = std::min(best, ((*pts)[i] - q).norm());
        }
    }
    return best;
  }
};

double directed_hausdorff(const std::vector<Vec2>& a, const Grid& gb) {
  double worst = 0.0;
  for (const Vec2& p : a) worst = std::max(worst, gb.nearest(p));
  return worst;
}

}  // namespace

double hausdorff_distance(const std::vector<Vec2>& a, const std::vector<Vec2>& b) {
  if (a.empty() || b.empty()) fail(Errc::InvalidInput, "hausdorff of an empty set");
  Vec2 lo = a.front(), hi = a.front();
  for (const Vec2& p : a) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  for (const Vec2& p : b) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  const double diag = (hi - lo).norm();
  const double cell = std::max(1e-12, diag / 64.0);
  Grid ga, gb;
  ga.build(a, cell);
  gb.build(b, cell);
  return std::max(directed_hausdorff(a, gb), directed_hausdorff(b, ga));
}

std::vector<Vec2> branch_points(const Branch& branch) {
  std::vector<Vec2> out;
  out.reserve(branch.nodes.size());
  for (const auto& n : branch.nodes) out.push_back(n.pos);
  return out;
}

std::vector<Vec2> branches_points(const std::vector<Branch>& branches) {
  std::vector<Vec2> out;
  for (const auto& br : branches)
    for (const auto& n : br.nodes) out.push_back(n.pos);
  return out;
}

}  // namespace equidist
