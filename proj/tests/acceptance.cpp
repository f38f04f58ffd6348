// Acceptance runner: one line per criterion, nonzero exit when any fails.
// argv[1] (optional) is the path of the command line tool for the
// determinism and exit-code checks.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "grayson/suites.hpp"

namespace {

using namespace grayson;

int failures = 0;

void line(const std::string& id, bool pass, const std::string& detail) {
  std::cout << (pass ? "[PASS] " : "[FAIL] ") << id << "  " << detail << "\n";
  std::cout.flush();
  if (!pass) ++failures;
}

std::string summary(const VerificationReport& r) {
  std::ostringstream os;
  os << r.lemma << ": " << r.samples << " samples, " << r.violations.size()
     << " violations";
  if (r.uncertified) os << " [uncertified: " << r.error_message << "]";
  if (r.input_error) os << " [input error: " << r.error_message << "]";
  if (!r.violations.empty())
    os << "; first: " << r.violations.front().message;
  return os.str();
}

void criterion(const std::string& id, const VerificationReport& r) {
  line(id, r.passed(), summary(r));
}

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& cmd) {
  RunResult res;
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) return res;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    res.output.append(buf.data(), got);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";

  {
    SuiteConfig cfg;
    cfg.samples = 100;
    criterion("C1  gradient theorem", suite_gradient_theorem(cfg));
    criterion("C2  norm corollary", suite_log_gradient_norm(cfg));
  }
  {
    SuiteConfig cfg;
    cfg.samples = 50;  // includes 20 quadrature cross-checks
    criterion("C3  metric invariance + distance form",
              suite_metric_invariance(cfg));
  }
  {
    SuiteConfig cfg;
    cfg.samples = 200;
    cfg.n = 3;
    criterion("C4  Lipschitz slope bound", suite_slope_lipschitz(cfg));
    criterion("C5  sandwich estimate", suite_sandwich(cfg));
  }
  {
    SuiteConfig cfg;
    cfg.samples = 100;
    cfg.n = 3;
    cfg.t = 1.0;
    cfg.alpha = 1.0;
    criterion("C6  neighborhood lemma", suite_comparison(cfg));
  }
  {
    SuiteConfig cfg;
    cfg.samples = 100;
    cfg.n = 3;
    criterion("C7  polygon identity vs direct enumeration",
              suite_grayson_identity(cfg));
  }
  {
    SuiteConfig cfg;
    cfg.samples = 1000;
    cfg.n = 3;
    cfg.t = 1.0;
    VerificationReport r = suite_chain_condition(cfg);
    bool nerve_ok = true;
    for (const auto& [k, v] : r.stats)
      if (k == "max_active" && v > 2) nerve_ok = false;
    line("C8  chain condition + nerve bound", r.passed() && nerve_ok,
         summary(r));
  }
  {
    SuiteConfig cfg;
    cfg.samples = 20;
    cfg.n = 3;
    criterion("C9  polygon structure + equivariance",
              suite_polygon_structure(cfg));
  }
  {
    SuiteConfig cfg;
    cfg.samples = 40;
    cfg.n = 4;
    criterion("C10 volume multiplicativity", suite_multiplicativity(cfg));
  }
  {
    SuiteConfig cfg;
    cfg.samples = 50;
    cfg.n = 3;
    criterion("C11 d_W descent + equivariance", suite_dw_descent(cfg));
  }
  {
    SuiteConfig cfg;
    cfg.samples = 100;
    VerificationReport flows = suite_flow_inequalities(cfg);
    SuiteConfig lcfg;
    lcfg.samples = 50;
    lcfg.t = 1.0;
    lcfg.delta = 1.0;
    lcfg.tau = 1.0;
    VerificationReport longness = suite_longness(lcfg);
    SuiteConfig bcfg = lcfg;
    bcfg.samples = 8;
    bcfg.beta = 0.0;  // boundary cases must report violations
    VerificationReport boundary = suite_longness(bcfg);
    line("C12 flow space: group law, inequalities, longness",
         flows.passed() && longness.passed() && boundary.passed(),
         summary(flows) + " | " + summary(longness) + " | boundary meta: " +
             summary(boundary));
  }
  {
    SuiteConfig cfg;
    cfg.samples = 200;  // per t in {1, 2, 4}
    criterion("C13 cusp height probe (n = 2)", suite_cusp_height(cfg));
  }
  if (cli.empty()) {
    line("C14 CLI determinism + exit codes", false,
         "no CLI path supplied on the command line");
  } else {
    bool ok = true;
    std::ostringstream detail;
    const std::string base =
        cli + " report --n 3 --samples 6 --seed 2024";
    const RunResult r1 = run_cli(base);
    const RunResult r2 = run_cli(base);
    if (r1.exit_code != 0 || r2.exit_code != 0) {
      ok = false;
      detail << "report run exit codes " << r1.exit_code << "/" << r2.exit_code
             << "; ";
    }
    if (r1.output != r2.output || r1.output.empty()) {
      ok = false;
      detail << "outputs differ between identical runs; ";
    }
    const RunResult dw = run_cli(
        cli + " dw --gram \"[[0.25,0],[0,4]]\" --sublattice \"[[1],[0]]\"");
    if (dw.exit_code != 0 || dw.output.find("\"d_W\": 4.0") == std::string::npos) {
      ok = false;
      detail << "dw contract failed (exit " << dw.exit_code << "); ";
    }
    const RunResult bogus = run_cli(cli + " bogus");
    if (bogus.exit_code != 2) {
      ok = false;
      detail << "unknown subcommand exit " << bogus.exit_code << " != 2; ";
    }
    const RunResult badjson =
        run_cli(cli + " polygon --gram \"[[1,0\"");
    if (badjson.exit_code != 2) {
      ok = false;
      detail << "malformed JSON exit " << badjson.exit_code << " != 2; ";
    }
    const RunResult viol = run_cli(
        cli + " cover-verify --n 3 --samples 8 --seed 7 --beta 0");
    if (viol.exit_code != 1) {
      ok = false;
      detail << "violation run exit " << viol.exit_code << " != 1; ";
    }
    const RunResult uncert = run_cli(
        cli + " polygon --gram \"[[1,0],[0,1]]\" --enum-bound 2");
    if (uncert.exit_code != 3) {
      ok = false;
      detail << "uncertified run exit " << uncert.exit_code << " != 3; ";
    }
    line("C14 CLI determinism + exit codes", ok,
         ok ? "byte-identical reruns; exit codes 0/1/2/3 as specified"
            : detail.str());
  }

  std::cout << (failures == 0 ? "ALL CRITERIA PASSED"
                              : std::to_string(failures) + " CRITERIA FAILED")
            << "\n";
  return failures == 0 ? 0 : 1;
}
