// Command-line front end: curve ingestion, equidistant/CSS computation,
// glueing-scheme listing, theorem verification, CSV/SVG/JSON emission.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "equidist/io.hpp"
#include "equidist/svg.hpp"
#include "equidist/theorems.hpp"

namespace fs = std::filesystem;
using namespace equidist;

namespace {

constexpr int kExitInvalidInput = 2;
constexpr int kExitNonGeneric = 3;
constexpr int kExitNumerical = 4;

int exit_code_for(Errc c) {
  switch (c) {
    case Errc::InvalidInput:
    case Errc::IoError:
      return kExitInvalidInput;
    case Errc::RegularityViolation:
    case Errc::DegenerateInflexion:
    case Errc::OriginOnInflexion:
    case Errc::TangentCoincidence:
    case Errc::NonGenericBranching:
    case Errc::TangentialRoot:
    case Errc::DegenerateQuartic:
    case Errc::HypothesisViolated:
      return kExitNonGeneric;
    default:
      return kExitNumerical;
  }
}

struct RunConfig {
  std::string input;
  std::vector<double> lambdas;
  int samples = 4096;
  std::string out_dir = ".";
  std::string formats = "svg,csv,json";
  unsigned long long seed = 1;
  std::vector<std::string> tol_overrides;
  bool dump_pairs = false;

  bool wants(const std::string& f) const { return formats.find(f) != std::string::npos; }

  void validate_lambdas() const {
    for (double l : lambdas)
      if (l == 0.0 || l == 1.0)
        fail(Errc::InvalidInput, "lambda must avoid 0 and 1 (they reproduce the curve)");
  }
  void validate_samples() const {
    if (samples < 256 || samples > 65536 || (samples & (samples - 1)) != 0)
      fail(Errc::InvalidInput, "samples must be a power of two in [256, 65536]");
  }
  TraceControl trace_control() const {
    TraceControl ctrl;
    for (const std::string& kv : tol_overrides) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) fail(Errc::InvalidInput, "bad --tol, expected key=val");
      const std::string key = kv.substr(0, eq);
      const double val = std::stod(kv.substr(eq + 1));
      if (key == "max_dpsi")
        ctrl.max_dpsi = val;
      else if (key == "cusp_param_width")
        ctrl.cusp_param_width = val;
      else if (key == "solve_tol")
        ctrl.solve_tol = val;
      else
        fail(Errc::InvalidInput, "unknown tolerance key: " + key);
    }
    return ctrl;
  }
};

FourierCurve load_and_check(const RunConfig& cfg) {
  const FourierCurve curve = load_curve(cfg.input);
  const GenericityReport rep = genericity_check(curve);
  if (!rep.generic()) {
    std::string why;
    for (const auto& n : rep.notes) why += "\n  " + n;
    fail(Errc::TangentCoincidence, "curve fails the genericity checks:" + why);
  }
  return curve;
}

std::string rotation_str(const Branch& br) {
  if (!br.rotation_twice) return "-";
  const int tw = *br.rotation_twice;
  if (tw % 2 == 0) return std::to_string(tw / 2);
  return std::to_string(tw) + "/2";
}

int cmd_compute(const RunConfig& cfg) {
  cfg.validate_lambdas();
  cfg.validate_samples();
  const FourierCurve curve = load_and_check(cfg);
  const ParallelStructure S = build_parallel_structure(curve, cfg.samples);
  const TraceControl ctrl = cfg.trace_control();
  fs::create_directories(cfg.out_dir);

  nlohmann::ordered_json summary;
  summary["input"] = cfg.input;
  summary["label"] = curve.label();
  summary["samples"] = cfg.samples;
  summary["lambdas"] = nlohmann::ordered_json::array();

  for (double lambda : cfg.lambdas) {
    const auto branches = full_equidistant(S, lambda, ctrl);
    nlohmann::ordered_json lj;
    lj["lambda"] = lambda;
    lj["branch_count"] = branches.size();
    lj["branches"] = nlohmann::ordered_json::array();
    std::ostringstream tag;
    tag << "lambda_" << lambda;
    for (size_t b = 0; b < branches.size(); ++b) {
      const Branch& br = branches[b];
      nlohmann::ordered_json bj;
      bj["index"] = b;
      bj["scheme"] = scheme_to_string(br.scheme);
      bj["closed"] = br.closed;
      bj["on_shell"] = br.on_shell;
      bj["degenerate_point"] = br.degenerate_point;
      bj["cusps"] = br.cusps.size();
      bj["inflexions"] = br.inflexions.size();
      bj["rotation"] = rotation_str(br);
      lj["branches"].push_back(bj);
      if (cfg.wants("csv")) {
        std::ofstream csv(fs::path(cfg.out_dir) /
                          (tag.str() + "_branch_" + std::to_string(b) + ".csv"));
        write_branch_csv(csv, br);
      }
    }
    if (cfg.wants("svg")) {
      std::ofstream svg(fs::path(cfg.out_dir) / (tag.str() + ".svg"));
      svg << render_svg(curve, branches);
    }
    summary["lambdas"].push_back(lj);
  }
  if (cfg.dump_pairs) {
    int idx = 0;
    for (const auto& phi : S.phi_sets)
      for (size_t i = 0; i < phi.size(); ++i)
        for (size_t j = i + 1; j < phi.size(); ++j) {
          std::ofstream csv(fs::path(cfg.out_dir) / ("pairs_" + std::to_string(idx++) + ".csv"));
          write_pairing_csv(csv, pair_continuation(S, phi[i], phi[j]));
        }
  }
  if (cfg.wants("json")) {
    std::ofstream js(fs::path(cfg.out_dir) / "summary.json");
    js << summary.dump(2) << "\n";
  }
  std::cout << summary.dump(2) << std::endl;
  return 0;
}

int cmd_branches(const RunConfig& cfg) {
  cfg.validate_samples();
  const FourierCurve curve = load_and_check(cfg);
  const ParallelStructure S = build_parallel_structure(curve, cfg.samples);
  for (LambdaClass cls : {LambdaClass::Half, LambdaClass::Generic}) {
    std::cout << (cls == LambdaClass::Half ? "lambda = 1/2:" : "generic lambda:") << "\n";
    for (const GluingScheme& scheme : maximal_schemes(S, cls)) {
      const BranchPrediction pred = predict(scheme, S);
      std::cout << "  " << scheme_to_string(scheme) << "\n    "
                << (scheme.closed ? "closed" : "on-shell") << ", rotation "
                << (pred.rotation_half_integer ? "half-integer" : "integer") << ", cusps "
                << (pred.cusp_parity_known ? (pred.cusp_parity_odd ? "odd" : "even")
                                           : "endpoint-dependent")
                << ", inflexions " << pred.inflexion_count << "\n";
    }
  }
  return 0;
}

int cmd_css(const RunConfig& cfg) {
  cfg.validate_samples();
  const FourierCurve curve = load_and_check(cfg);
  const ParallelStructure S = build_parallel_structure(curve, cfg.samples);
  const CssCurve css = css_curve(S, cfg.trace_control());
  fs::create_directories(cfg.out_dir);
  if (cfg.wants("csv")) {
    std::ofstream csv(fs::path(cfg.out_dir) / "css.csv");
    csv << "s,t,x,y,kappa_css,near_pole\n";
    for (const auto& seg : css.segments) {
      for (const auto& n : seg)
        csv << format_double(n.s) << ',' << format_double(n.t) << ',' << format_double(n.q.x())
            << ',' << format_double(n.q.y()) << ',' << format_double(n.kappa_css) << ','
            << (n.near_pole ? 1 : 0) << '\n';
    }
  }
  nlohmann::ordered_json j;
  j["segments"] = css.segments.size();
  j["cusps"] = css_cusp_count(css);
  j["degenerate_point"] = css.degenerate_point;
  j["endpoint_markers"] = css.endpoint_markers.size();
  if (cfg.wants("json")) {
    std::ofstream js(fs::path(cfg.out_dir) / "css.json");
    js << j.dump(2) << "\n";
  }
  std::cout << j.dump(2) << std::endl;
  return 0;
}

int cmd_verify(const std::string& fixture, int random_count, unsigned long long seed,
               int samples, const std::string& out_dir) {
  VerificationReport rep;
  if (fixture == "all") {
    rep = verify_fixtures(samples);
  } else if (fixture == "c2") {
    rep = check_rosette(2);
  } else if (fixture == "c3") {
    rep = check_rosette(3);
  } else if (fixture == "w1") {
    const ParallelStructure S = build_parallel_structure(fixtures::w1(), samples);
    rep.merge(check_wn(S));
    rep.merge(check_inflexion_counts(S, 0.3));
    rep.merge(check_onshell_parity(S));
  } else if (fixture == "pe") {
    const ParallelStructure S =
        build_parallel_structure(fixtures::perturbed_ellipse(), samples);
    rep.merge(check_cusp_parity(S, {0.2, 0.3, 0.4, 0.45}));
  } else if (!fixture.empty()) {
    fail(Errc::InvalidInput, "unknown fixture for verify: " + fixture);
  }
  if (random_count > 0) rep.merge(check_random_invariants(seed, random_count));
  if (rep.checks.empty()) fail(Errc::InvalidInput, "nothing to verify; pass --fixtures or --random");

  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    std::ofstream js(fs::path(out_dir) / "verify.json");
    js << report_to_json(rep);
  }
  std::cout << report_summary(rep);
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wigner caustics, affine equidistants and centre symmetry sets of closed planar curves"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string lambda_csv = "0.5";
  std::string fixture;
  int random_count = 0;

  auto add_common = [&](CLI::App* sub, bool needs_input) {
    if (needs_input) sub->add_option("input", cfg.input, "curve JSON file")->required();
    sub->add_option("--samples", cfg.samples, "dense grid size (power of two)")
        ->envname("EQUIDIST_SAMPLES");
    sub->add_option("--out", cfg.out_dir, "output directory")->envname("EQUIDIST_OUT");
    sub->add_option("--format", cfg.formats, "comma list of svg,csv,json")
        ->envname("EQUIDIST_FORMAT");
    sub->add_option("--seed", cfg.seed, "random seed")->envname("EQUIDIST_SEED");
    sub->add_option("--tol", cfg.tol_overrides, "tolerance overrides key=val")
        ->envname("EQUIDIST_TOL");
  };

  CLI::App* compute = app.add_subcommand("compute", "trace equidistant branches");
  add_common(compute, true);
  compute->add_option("--lambda", lambda_csv, "comma-separated lambda values")
      ->envname("EQUIDIST_LAMBDA");
  compute->add_flag("--pairs", cfg.dump_pairs, "dump parallel pairings as CSV");

  CLI::App* branches = app.add_subcommand("branches", "print maximal glueing schemes");
  add_common(branches, true);

  CLI::App* css = app.add_subcommand("css", "compute the centre symmetry set");
  add_common(css, true);

  CLI::App* verify = app.add_subcommand("verify", "run the verification harness");
  verify->add_option("--fixtures", fixture, "all | c2 | c3 | w1 | pe");
  verify->add_option("--fixture", fixture, "alias of --fixtures");
  verify->add_option("--random", random_count, "number of random curves");
  verify->add_option("--seed", cfg.seed, "random seed")->envname("EQUIDIST_SEED");
  verify->add_option("--samples", cfg.samples, "dense grid size")->envname("EQUIDIST_SAMPLES");
  verify->add_option("--out", cfg.out_dir, "output directory for verify.json")
      ->envname("EQUIDIST_OUT");

  CLI11_PARSE(app, argc, argv);

  try {
    if (compute->parsed()) {
      cfg.lambdas.clear();
      std::stringstream ss(lambda_csv);
      std::string item;
      while (std::getline(ss, item, ',')) cfg.lambdas.push_back(std::stod(item));
      return cmd_compute(cfg);
    }
    if (branches->parsed()) return cmd_branches(cfg);
    if (css->parsed()) return cmd_css(cfg);
    if (verify->parsed())
      return cmd_verify(fixture, random_count, cfg.seed, cfg.samples,
                        verify->count("--out") ? cfg.out_dir : "");
  } catch (const Error& e) {
    std::cerr << "error (" << errc_name(e.code()) << "): " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return 0;
}
