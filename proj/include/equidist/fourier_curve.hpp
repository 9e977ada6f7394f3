#pragma once

#include <optional>
#include <string>

#include "equidist/geometry.hpp"

namespace equidist {

// Closed plane curve given as a truncated trigonometric series,
//   x(t) = sum_k xc[k] cos(kt) + xs[k] sin(kt),   t in [0, 2pi),
// and likewise for y. Closedness is structural; derivatives of any order
// are exact term-wise derivatives. Degree is capped at kMaxDegree.
class FourierCurve {
 public:
  static constexpr int kMaxDegree = 64;
  static constexpr double kRegularityEps = 1e-8;

  FourierCurve(ArrayXd xc, ArrayXd xs, ArrayXd yc, ArrayXd ys, std::string label = {});

  int degree() const { return static_cast<int>(xc_.size()) - 1; }
  const ArrayXd& xc() const { return xc_; }
  const ArrayXd& xs() const { return xs_; }
  const ArrayXd& yc() const { return yc_; }
  const ArrayXd& ys() const { return ys_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  // d-th derivative of (x, y) at t; d = 0 gives the position.
  Vec2 derivative(double t, int order) const;
  Vec2 position(double t) const { return derivative(t, 0); }

  double min_speed() const { return min_speed_; }

 private:
  ArrayXd xc_, xs_, yc_, ys_;
  std::string label_;
  double min_speed_ = 0.0;
};

// Pointwise data of the curve at one parameter: position, derivatives up to
// fourth order, speed, signed curvature. The tangent angle theta is the
// continuous lift supplied by the caller's context (raw atan2 value here).
struct Jet {
  double t = 0.0;
  Vec2 f, d1, d2, d3, d4;
  double speed = 0.0;
  double kappa = 0.0;        // signed curvature, det(f', f'')/|f'|^3
  double kappa_prime_t = 0.0;  // d(kappa)/dt (parameter, not arc length)
  double theta_raw = 0.0;    // atan2 of f'

  Vec2 unit_tangent() const { return d1 / speed; }
  Vec2 unit_normal() const { return rot90(d1) / speed; }
  // d(kappa)/ds with s the arc length
  double kappa_prime_s() const { return kappa_prime_t / speed; }
};

Jet evaluate_jet(const FourierCurve& curve, double t);

double signed_curvature(const FourierCurve& curve, double t);

// d(theta)/dt of the tangent direction lift: kappa * |f'|.
double tangent_angle_rate(const FourierCurve& curve, double t);

// Image of the curve under x -> A x + b, applied to the coefficients.
FourierCurve affine_transform(const FourierCurve& curve, const Eigen::Matrix2d& A, const Vec2& b);

// Orientation reversal t -> -t (negates all sine coefficients).
FourierCurve reversed(const FourierCurve& curve);

}  // namespace equidist
