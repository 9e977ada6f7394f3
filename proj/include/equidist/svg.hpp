#pragma once

#include <string>
#include <vector>

#include "equidist/equidistant.hpp"

namespace equidist {

// Deterministic SVG rendering: the source curve dashed, branches solid with
// a fixed palette, cusps as filled dots, inflexions as open circles. The
// y axis is flipped to the mathematical convention and the view box covers
// everything with a 5% margin. Styling lives in named classes so output
// diffs stay stable.
std::string render_svg(const FourierCurve& curve, const std::vector<Branch>& branches,
                       int width = 800);

}  // namespace equidist
