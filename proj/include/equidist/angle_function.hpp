#pragma once

#include <vector>

#include "equidist/curve_analysis.hpp"
#include "equidist/fourier_curve.hpp"

namespace equidist {

// Continuous lift of the tangent direction of a closed curve, with the mod-pi
// reduction used to detect parallel tangents. The lift theta is sampled on a
// uniform grid dense enough that adjacent samples differ by less than pi/4;
// between samples it is evaluated by local unwrapping against the nearest
// sample (exact up to the atan2 of the exact derivative).
//
// The angle function in the mod-pi chart is psi(t) = (theta(t) - theta(t0))
// mod pi, where t0 is the parameter origin, shifted away from inflexions.
class AngleFunction {
 public:
  struct Extremum {
    double t = 0.0;       // parameter of the inflexion realizing the extremum
    double theta = 0.0;   // lift value there
    double value = 0.0;   // tangent line direction mod pi, in [0, pi)
    bool is_max = false;
  };

  explicit AngleFunction(FourierCurve curve) : curve_(std::move(curve)) {}

  static AngleFunction build(const FourierCurve& curve, int samples = 4096,
                             const AnalysisOptions& opts = {});

  const FourierCurve& curve() const { return curve_; }
  int samples() const { return static_cast<int>(theta_.size()); }
  double origin() const { return origin_; }
  int rotation() const { return rotation_; }
  double theta_origin() const { return theta_at(origin_); }

  // Lift value at t; t may lie outside [0, 2pi), each full period adds
  // 2pi * rotation.
  double theta_at(double t) const;
  // d theta / dt = kappa |f'|
  double dtheta_at(double t) const { return tangent_angle_rate(curve_, t); }
  // Angle function value in [0, pi).
  double psi_at(double t) const { return wrap_half_pi_line(theta_at(t) - theta_origin_); }

  const std::vector<Extremum>& extrema() const { return extrema_; }
  const std::vector<double>& theta_samples() const { return theta_; }
  Vec2 base_direction() const { return curve_.derivative(origin_, 1).normalized(); }

 private:
  FourierCurve curve_;
  double origin_ = 0.0;
  double theta_origin_ = 0.0;
  int rotation_ = 0;
  std::vector<double> theta_;  // lift at i * 2pi/n
  std::vector<Extremum> extrema_;
};

// Spec-facing constructor name.
inline AngleFunction angle_function(const FourierCurve& curve, int samples = 4096,
                                    const AnalysisOptions& opts = {}) {
  return AngleFunction::build(curve, samples, opts);
}

}  // namespace equidist
