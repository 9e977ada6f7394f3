#include "equidist/angle_function.hpp"

#include <algorithm>
#include <cmath>

namespace equidist {

AngleFunction AngleFunction::build(const FourierCurve& curve, int samples,
                                   const AnalysisOptions& opts) {
  AngleFunction af(curve);

  const std::vector<InflexionPoint> infl = inflexion_points(curve, opts);

  // The origin must avoid inflexions; try a fixed schedule of offsets and
  // keep the first one comfortably away from every inflexion.
  double origin = 0.0;
  bool found = false;
  for (int j = 0; j <= 100; ++j) {
    const double cand = j * kTwoPi / 101.0;
    double dist = kTwoPi;
    for (const auto& p : infl) {
      double d = std::abs(wrap_pi(cand - p.t));
      dist = std::min(dist, d);
    }
    if (dist > kTwoPi / 1024.0) {
      origin = cand;
      found = true;
      break;
    }
  }
  if (!found) fail(Errc::OriginOnInflexion, "no origin offset avoids the inflexions");
  af.origin_ = origin;

  // Dense lift; resample until adjacent samples differ by < pi/4.
  int n = samples;
  for (;;) {
    af.theta_.assign(n, 0.0);
    double prev_raw = std::atan2(curve.derivative(0.0, 1).y(), curve.derivative(0.0, 1).x());
    double lift = prev_raw;
    af.theta_[0] = lift;
    double max_step = 0.0;
    for (int i = 1; i <= n; ++i) {
      const Vec2 d1 = curve.derivative(kTwoPi * i / n, 1);
      const double raw = std::atan2(d1.y(), d1.x());
      const double step = wrap_pi(raw - prev_raw);
      max_step = std::max(max_step, std::abs(step));
      lift += step;
      if (i < n) af.theta_[i] = lift;
      prev_raw = raw;
    }
    const double total = lift - af.theta_[0];
    const double turns = total / kTwoPi;
    if (max_step < kPi / 4.0) {
      if (std::abs(turns - std::round(turns)) > 0.01)
        fail(Errc::LiftInconsistent, "lift does not close to an integer number of turns");
      af.rotation_ = static_cast<int>(std::round(turns));
      break;
    }
    if (n >= (1 << 20)) fail(Errc::LiftInconsistent, "lift needs more than 2^20 samples");
    n *= 2;
  }
  af.theta_origin_ = af.theta_at(origin);

  // Extrema of the angle function are exactly the inflexions; phi' = kappa |f'|.
  for (const auto& p : infl) {
    Extremum e;
    e.t = p.t;
    e.theta = af.theta_at(p.t);
    e.value = wrap_half_pi_line(e.theta - af.theta_origin_);
    e.is_max = p.kappa_prime_sign < 0;  // kappa goes + -> -, so theta peaked
    af.extrema_.push_back(e);
  }
  // Maxima and minima must alternate along the curve.
  for (size_t i = 0; i + 1 < af.extrema_.size(); ++i)
    if (af.extrema_[i].is_max == af.extrema_[i + 1].is_max)
      fail(Errc::InternalError, "angle-function extrema do not alternate");
  return af;
}

double AngleFunction::theta_at(double t) const {
  const int n = static_cast<int>(theta_.size());
  double wraps = std::floor(t / kTwoPi);
  const double tr = t - wraps * kTwoPi;
  const int i = std::min(n - 1, static_cast<int>(tr * n / kTwoPi));
  const Vec2 d1 = curve_.derivative(tr, 1);
  const double raw = std::atan2(d1.y(), d1.x());
  const double base = theta_[i];
  return base + wrap_pi(raw - base) + wraps * kTwoPi * rotation_;
}

}  // namespace equidist
