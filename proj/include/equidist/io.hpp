#pragma once

#include <iosfwd>
#include <string>

#include "equidist/equidistant.hpp"
#include "equidist/parallel.hpp"

namespace equidist {

// Curve files are UTF-8 JSON with coefficient arrays "xc", "xs", "yc", "ys"
// (index k = harmonic k; index 0 of the sine arrays is ignored) and an
// optional "label". Floats are printed with 17 significant digits so files
// round-trip bit-exactly.
FourierCurve load_curve(const std::string& path);
FourierCurve parse_curve_json(const std::string& text);
std::string curve_to_json(const FourierCurve& curve);
void save_curve(const FourierCurve& curve, const std::string& path);

// One row per node: s, t, x, y, kappa_E, is_cusp, is_inflexion.
void write_branch_csv(std::ostream& os, const Branch& branch);
// One row per pairing node: s, t, psi.
void write_pairing_csv(std::ostream& os, const ParallelPairing& pairing);

std::string format_double(double v);  // 17 significant digits

}  // namespace equidist
