#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <string>

namespace equidist {

using Vec2 = Eigen::Vector2d;
using Eigen::ArrayXd;
using Eigen::Matrix2Xd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Error conditions surfaced by the pipeline. Grouped by how the CLI maps
// them to exit codes: input errors (2), genericity failures (3),
// numerical failures (4).
enum class Errc {
  InvalidInput,
  IoError,
  // genericity
  RegularityViolation,
  DegenerateInflexion,
  OriginOnInflexion,
  TangentCoincidence,
  NonGenericBranching,
  TangentialRoot,
  DegenerateQuartic,
  HypothesisViolated,
  // numerical
  LiftInconsistent,
  ContinuationStall,
  ArcAccountingMismatch,
  AtCusp,
  InternalError,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::IoError: return "IoError";
    case Errc::RegularityViolation: return "RegularityViolation";
    case Errc::DegenerateInflexion: return "DegenerateInflexion";
    case Errc::OriginOnInflexion: return "OriginOnInflexion";
    case Errc::TangentCoincidence: return "TangentCoincidence";
    case Errc::NonGenericBranching: return "NonGenericBranching";
    case Errc::TangentialRoot: return "TangentialRoot";
    case Errc::DegenerateQuartic: return "DegenerateQuartic";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::LiftInconsistent: return "LiftInconsistent";
    case Errc::ContinuationStall: return "ContinuationStall";
    case Errc::ArcAccountingMismatch: return "ArcAccountingMismatch";
    case Errc::AtCusp: return "AtCusp";
    case Errc::InternalError: return "InternalError";
  }
  return "Unknown";
}

// Wrap into (-pi, pi].
inline double wrap_pi(double a) {
  a = std::fmod(a, kTwoPi);
  if (a <= -kPi) a += kTwoPi;
  if (a > kPi) a -= kTwoPi;
  return a;
}

// Wrap into [0, 2pi).
inline double wrap_two_pi(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0) a += kTwoPi;
  return a;
}

// Wrap into [0, pi): direction of an unoriented line.
inline double wrap_half_pi_line(double a) {
  a = std::fmod(a, kPi);
  if (a < 0) a += kPi;
  return a;
}

// Difference of line directions, wrapped into (-pi/2, pi/2].
inline double line_angle_diff(double a, double b) {
  double d = std::fmod(a - b, kPi);
  if (d <= -kPi / 2) d += kPi;
  if (d > kPi / 2) d -= kPi;
  return d;
}

inline Vec2 rot90(const Vec2& v) { return Vec2(-v.y(), v.x()); }

inline double cross2(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

}  // namespace equidist
