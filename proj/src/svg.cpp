#include "equidist/svg.hpp"

#include <cstdio>

namespace equidist {

namespace {

const char* kPalette[] = {"#1f6fb2", "#c23b22", "#2e8540", "#7b4fa6",
                          "#b8860b", "#0e7c7b", "#99424f", "#5b5ea6"};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

void emit_polyline(std::string& svg, const std::vector<Vec2>& pts, const std::string& cls) {
  svg += "  <polyline class=\"" + cls + "\" points=\"";
  for (size_t i = 0; i < pts.size(); ++i) {
    if (i) svg += ' ';
    svg += num(pts[i].x()) + "," + num(-pts[i].y());
  }
  svg += "\"/>\n";
}

}  // namespace

std::string render_svg(const FourierCurve& curve, const std::vector<Branch>& branches,
                       int width) {
  Vec2 lo(1e300, 1e300), hi(-1e300, -1e300);
  std::vector<Vec2> mpts;
  const int n = 1024;
  for (int i = 0; i <= n; ++i) {
    mpts.push_back(curve.position(kTwoPi * i / n));
    lo = lo.cwiseMin(mpts.back());
    hi = hi.cwiseMax(mpts.back());
  }
  for (const auto& br : branches)
    for (const auto& node : br.nodes) {
      lo = lo.cwiseMin(node.pos);
      hi = hi.cwiseMax(node.pos);
    }
  const Vec2 span = hi - lo;
  const double margin = 0.05 * std::max(span.x(), span.y());
  const double x0 = lo.x() - margin, y0 = -(hi.y() + margin);
  const double w = span.x() + 2 * margin, h = span.y() + 2 * margin;
  const double stroke = std::max(w, h) / 400.0;
  const double dot = 2.2 * stroke;

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" viewBox=\"" + num(x0) + " " + num(y0) + " " + num(w) + " " + num(h) + "\">\n";
  svg += "  <style>\n";
  svg += "    .curve-m { fill:none; stroke:#555; stroke-width:" + num(stroke) +
         "; stroke-dasharray:" + num(4 * stroke) + " " + num(3 * stroke) + "; }\n";
  for (size_t b = 0; b < branches.size() && b < 8; ++b)
    svg += "    .branch-" + std::to_string(b) + " { fill:none; stroke:" + kPalette[b % 8] +
           "; stroke-width:" + num(stroke) + "; }\n";
  svg += "    .cusp { fill:#000; stroke:none; }\n";
  svg += "    .inflexion { fill:none; stroke:#000; stroke-width:" + num(0.6 * stroke) + "; }\n";
  svg += "  </style>\n";

  emit_polyline(svg, mpts, "curve-m");
  for (size_t b = 0; b < branches.size(); ++b) {
    std::vector<Vec2> pts;
    for (const auto& node : branches[b].nodes) pts.push_back(node.pos);
    emit_polyline(svg, pts, "branch-" + std::to_string(b % 8));
  }
  for (const auto& br : branches) {
    for (const auto& c : br.cusps)
      svg += "  <circle class=\"cusp\" cx=\"" + num(c.pos.x()) + "\" cy=\"" + num(-c.pos.y()) +
             "\" r=\"" + num(dot) + "\"/>\n";
    for (const auto& fi : br.inflexions)
      svg += "  <circle class=\"inflexion\" cx=\"" + num(fi.pos.x()) + "\" cy=\"" +
             num(-fi.pos.y()) + "\" r=\"" + num(1.6 * dot) + "\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace equidist
