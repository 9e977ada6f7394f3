#include "equidist/fourier_curve.hpp"

#include <algorithm>

namespace equidist {

namespace {

ArrayXd pad_to(const ArrayXd& a, Eigen::Index n) {
  ArrayXd out = ArrayXd::Zero(n);
  out.head(a.size()) = a;
  return out;
}

}  // namespace

FourierCurve::FourierCurve(ArrayXd xc, ArrayXd xs, ArrayXd yc, ArrayXd ys, std::string label)
    : label_(std::move(label)) {
  const Eigen::Index n =
      std::max({xc.size(), xs.size(), yc.size(), ys.size(), Eigen::Index(1)});
  if (n - 1 > kMaxDegree)
    fail(Errc::InvalidInput, "curve degree exceeds cap " + std::to_string(kMaxDegree));
  xc_ = pad_to(xc, n);
  xs_ = pad_to(xs, n);
  yc_ = pad_to(yc, n);
  ys_ = pad_to(ys, n);
  xs_[0] = 0.0;  // sine index 0 has no meaning
  ys_[0] = 0.0;

  // Regularity: min |f'| over a dense sample must stay above the threshold.
  const int nsample = 4096;
  double mn = std::numeric_limits<double>::infinity();
  for (int i = 0; i < nsample; ++i) {
    const double t = kTwoPi * i / nsample;
    mn = std::min(mn, derivative(t, 1).norm());
  }
  min_speed_ = mn;
  if (!(mn > kRegularityEps))
    fail(Errc::RegularityViolation,
         "curve is not regular: min |f'| = " + std::to_string(mn));
}

Vec2 FourierCurve::derivative(double t, int order) const {
  const Eigen::Index n = xc_.size();
  double x = 0.0, y = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (order > 0 && k == 0) continue;
    const double kd = std::pow(static_cast<double>(k), order);
    const double c = std::cos(k * t), s = std::sin(k * t);
    // d^m/dt^m cos(kt) = k^m cos(kt + m pi/2), same phase shift for sin
    double cb, sb;
    switch (order & 3) {
      case 0: cb = c; sb = s; break;
      case 1: cb = -s; sb = c; break;
      case 2: cb = -c; sb = -s; break;
      default: cb = s; sb = -c; break;
    }
    x += kd * (xc_[k] * cb + xs_[k] * sb);
    y += kd * (yc_[k] * cb + ys_[k] * sb);
  }
  return Vec2(x, y);
}

Jet evaluate_jet(const FourierCurve& curve, double t) {
  Jet j;
  j.t = t;
  j.f = curve.derivative(t, 0);
  j.d1 = curve.derivative(t, 1);
  j.d2 = curve.derivative(t, 2);
  j.d3 = curve.derivative(t, 3);
  j.d4 = curve.derivative(t, 4);
  j.speed = j.d1.norm();
  const double det12 = cross2(j.d1, j.d2);
  j.kappa = det12 / (j.speed * j.speed * j.speed);
  const double det13 = cross2(j.d1, j.d3);
  const double dot12 = j.d1.dot(j.d2);
  const double sp2 = j.speed * j.speed;
  j.kappa_prime_t = (det13 * sp2 - 3.0 * det12 * dot12) / (sp2 * sp2 * j.speed);
  j.theta_raw = std::atan2(j.d1.y(), j.d1.x());
  return j;
}

double signed_curvature(const FourierCurve& curve, double t) {
  const Vec2 d1 = curve.derivative(t, 1);
  const Vec2 d2 = curve.derivative(t, 2);
  const double sp = d1.norm();
  return cross2(d1, d2) / (sp * sp * sp);
}

double tangent_angle_rate(const FourierCurve& curve, double t) {
  const Vec2 d1 = curve.derivative(t, 1);
  const Vec2 d2 = curve.derivative(t, 2);
  return cross2(d1, d2) / d1.squaredNorm();
}

FourierCurve affine_transform(const FourierCurve& curve, const Eigen::Matrix2d& A, const Vec2& b) {
  ArrayXd xc = A(0, 0) * curve.xc() + A(0, 1) * curve.yc();
  ArrayXd xs = A(0, 0) * curve.xs() + A(0, 1) * curve.ys();
  ArrayXd yc = A(1, 0) * curve.xc() + A(1, 1) * curve.yc();
  ArrayXd ys = A(1, 0) * curve.xs() + A(1, 1) * curve.ys();
  xc[0] += b.x();
  yc[0] += b.y();
  return FourierCurve(xc, xs, yc, ys, curve.label());
}

FourierCurve reversed(const FourierCurve& curve) {
  return FourierCurve(curve.xc(), -curve.xs(), curve.yc(), -curve.ys(), curve.label());
}

}  // namespace equidist
