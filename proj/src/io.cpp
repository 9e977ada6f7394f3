#include "equidist/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace equidist {

namespace {

ArrayXd array_field(const nlohmann::json& j, const char* name) {
  if (!j.contains(name)) return ArrayXd();
  const auto& arr = j.at(name);
  if (!arr.is_array()) fail(Errc::InvalidInput, std::string(name) + " must be an array");
  ArrayXd out(arr.size());
  for (size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_number()) fail(Errc::InvalidInput, std::string(name) + " must hold numbers");
    out[static_cast<Eigen::Index>(i)] = arr[i].get<double>();
  }
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

FourierCurve parse_curve_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::InvalidInput, std::string("curve file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) fail(Errc::InvalidInput, "curve file must hold a JSON object");
  std::string label = j.value("label", std::string());
  return FourierCurve(array_field(j, "xc"), array_field(j, "xs"), array_field(j, "yc"),
                      array_field(j, "ys"), label);
}

FourierCurve load_curve(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::IoError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_curve_json(ss.str());
}

std::string curve_to_json(const FourierCurve& curve) {
  // hand-rolled emission keeps the 17-digit float format bit-exact
  auto arr = [](const ArrayXd& a) {
    std::string s = "[";
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      if (i) s += ", ";
      s += format_double(a[i]);
    }
    return s + "]";
  };
  std::string s = "{\n";
  s += "  \"xc\": " + arr(curve.xc()) + ",\n";
  s += "  \"xs\": " + arr(curve.xs()) + ",\n";
  s += "  \"yc\": " + arr(curve.yc()) + ",\n";
  s += "  \"ys\": " + arr(curve.ys());
  if (!curve.label().empty()) {
    s += ",\n  \"label\": " + nlohmann::json(curve.label()).dump();
  }
  s += "\n}\n";
  return s;
}

void save_curve(const FourierCurve& curve, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(Errc::IoError, "cannot write " + path);
  out << curve_to_json(curve);
}

void write_branch_csv(std::ostream& os, const Branch& branch) {
  os << "s,t,x,y,kappa_E,is_cusp,is_inflexion\n";
  for (const auto& n : branch.nodes) {
    os << format_double(n.s) << ',' << format_double(n.t) << ',' << format_double(n.pos.x())
       << ',' << format_double(n.pos.y()) << ',' << format_double(n.kappa_e) << ','
       << (n.is_cusp ? 1 : 0) << ',' << (n.is_inflexion ? 1 : 0) << '\n';
  }
}

void write_pairing_csv(std::ostream& os, const ParallelPairing& pairing) {
  os << "s,t,psi\n";
  for (const auto& n : pairing.nodes)
    os << format_double(wrap_two_pi(n.s)) << ',' << format_double(wrap_two_pi(n.t)) << ','
       << format_double(n.psi) << '\n';
}

}  // namespace equidist
