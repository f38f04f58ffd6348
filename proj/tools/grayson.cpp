// Command line front end: canonical polygons, the instability measure d_W,
// and the sampled verification suites, all emitting deterministic JSON.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

#include "grayson/json_io.hpp"
#include "grayson/suites.hpp"

namespace {

using namespace grayson;

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInputError = 2;
constexpr int kExitUncertified = 3;

nlohmann::json parse_inline_or_file(const std::string& arg, const char* what) {
  const size_t first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '[' || arg[first] == '{'))
    return nlohmann::json::parse(arg);
  std::ifstream f(arg);
  if (!f)
    throw std::invalid_argument(std::string(what) + ": cannot open file '" +
                                arg + "'");
  return nlohmann::json::parse(f);
}

int emit(const nlohmann::ordered_json& doc, const std::string& out_path) {
  const std::string text = doc.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return kExitPass;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "cannot open output path: " << out_path << "\n";
    return kExitInputError;
  }
  f << text;
  return kExitPass;
}

int write_text(const std::string& text, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "cannot open output path: " << path << "\n";
    return kExitInputError;
  }
  f << text;
  return kExitPass;
}

int thread_cap() {
  const char* env = std::getenv("GRAYSON_LAB_THREADS");
  if (!env) return 1;
  const int cap = std::atoi(env);
  if (cap <= 1) return 1;
  const int hw = int(std::thread::hardware_concurrency());
  return std::min(cap, std::max(1, hw));
}

int exit_code_for(const std::vector<VerificationReport>& suites) {
  bool violation = false, uncertified = false;
  for (const auto& r : suites) {
    if (r.input_error) return kExitInputError;
    uncertified |= r.uncertified;
    violation |= !r.violations.empty();
  }
  if (uncertified) return kExitUncertified;
  return violation ? kExitViolation : kExitPass;
}

int run_suites(const SuiteConfig& cfg,
               const std::vector<VerificationReport>& suites,
               const std::string& out_path) {
  (void)cfg;
  const int rc = emit(to_json(suites), out_path);
  if (rc != kExitPass) return rc;
  return exit_code_for(suites);
}

struct CommonFlags {
  std::string gram, sublattice, out, csv;
  SuiteConfig cfg;
  std::optional<double> beta;
  std::optional<std::size_t> enum_bound;

  void apply() {
    cfg.threads = thread_cap();
    cfg.beta = beta;
    if (enum_bound) {
      cfg.enum_opts.max_points = *enum_bound;
      cfg.enum_opts.max_subsets = *enum_bound;
    }
  }
};

void add_suite_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--n", f.cfg.n, "ambient dimension")->check(CLI::Range(2, 6));
  cmd->add_option("--t", f.cfg.t, "cover threshold t >= 1");
  cmd->add_option("--alpha", f.cfg.alpha, "neighborhood radius");
  cmd->add_option("--delta", f.cfg.delta, "flow tube radius");
  cmd->add_option("--tau", f.cfg.tau, "flow time half-window");
  cmd->add_option("--beta", f.beta, "override for the cover margin beta");
  cmd->add_option("--seed", f.cfg.seed, "RNG seed");
  cmd->add_option("--samples", f.cfg.samples, "sample count")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--enum-bound", f.enum_bound,
                  "cap on enumeration work (points and subsets)");
  cmd->add_option("--out", f.out, "write JSON here instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lattice filtrations, instability measures and equivariant "
               "cover checks on the space of inner products"};
  app.require_subcommand(1);

  CommonFlags f;

  CLI::App* polygon = app.add_subcommand(
      "polygon", "canonical plot, polygon and filtration of a form");
  polygon->add_option("--gram", f.gram, "Gram matrix (inline JSON or path)")
      ->required();
  polygon->add_option("--out", f.out, "write JSON here instead of stdout");
  polygon->add_option("--csv", f.csv, "also write rank,log_minvol CSV here");
  polygon->add_option("--enum-bound", f.enum_bound,
                      "cap on enumeration work (points and subsets)");

  CLI::App* dw = app.add_subcommand(
      "dw", "instability measure d_W with its slope breakdown");
  dw->add_option("--gram", f.gram, "Gram matrix (inline JSON or path)")
      ->required();
  dw->add_option("--sublattice", f.sublattice,
                 "sublattice basis (inline JSON or path)")
      ->required();
  dw->add_option("--out", f.out, "write JSON here instead of stdout");
  dw->add_option("--enum-bound", f.enum_bound,
                 "cap on enumeration work (points and subsets)");

  CLI::App* cover = app.add_subcommand(
      "cover-verify", "equivariance, chain and neighborhood suites");
  add_suite_flags(cover, f);

  CLI::App* grad = app.add_subcommand(
      "grad-check", "finite-difference gradient and norm-law suites");
  add_suite_flags(grad, f);

  CLI::App* flow = app.add_subcommand(
      "flow-verify", "flow space inequalities and longness suites");
  add_suite_flags(flow, f);

  CLI::App* report = app.add_subcommand("report", "all suites in one document");
  add_suite_flags(report, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitInputError;
  }

  try {
    f.apply();
    if (polygon->parsed()) {
      const InnerProduct s =
          inner_product_from_json(parse_inline_or_file(f.gram, "--gram"));
      const CanonicalPolygon poly = canonical_polygon(s, f.cfg.enum_opts);
      const int rc = emit(to_json(poly), f.out);
      if (rc != kExitPass) return rc;
      if (!f.csv.empty()) return write_text(polygon_csv(poly), f.csv);
      if (!f.out.empty()) return write_text(polygon_csv(poly), f.out + ".csv");
      return kExitPass;
    }
    if (dw->parsed()) {
      const InnerProduct s =
          inner_product_from_json(parse_inline_or_file(f.gram, "--gram"));
      const Sublattice w =
          sublattice_from_json(parse_inline_or_file(f.sublattice, "--sublattice"));
      const DwBreakdown b =
          d_w_breakdown(normalize_det(s), w, f.cfg.enum_opts);
      nlohmann::ordered_json j;
      j["d_W"] = b.d_w;
      j["c_inf"] = b.c_inf;
      j["c_sup"] = b.c_sup;
      return emit(j, f.out);
    }
    if (cover->parsed())
      return run_suites(f.cfg, run_cover_suites(f.cfg), f.out);
    if (grad->parsed()) return run_suites(f.cfg, run_grad_suites(f.cfg), f.out);
    if (flow->parsed()) return run_suites(f.cfg, run_flow_suites(f.cfg), f.out);
    if (report->parsed())
      return run_suites(f.cfg, run_all_suites(f.cfg), f.out);
  } catch (const UncertifiedEnumerationError& e) {
    std::cerr << "uncertified enumeration: " << e.what() << "\n";
    return kExitUncertified;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "JSON error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
