#pragma once

#include <optional>

#include "grayson/flowspace.hpp"
#include "grayson/sampling.hpp"

namespace grayson {

// Shared knobs for the sampled verification suites. Identical configs give
// byte-identical reports regardless of the thread count.
struct SuiteConfig {
  int n = 3;
  double t = 1.0;
  double alpha = 1.0;
  double delta = 1.0;
  double tau = 1.0;
  std::optional<double> beta;  // default: neighborhood_beta
  std::uint64_t seed = 12345;
  int samples = 100;
  int threads = 1;
  EnumOptions enum_opts;
};

// volume gradients (finite differences) and the sqrt(m) norm law
VerificationReport suite_gradient_theorem(const SuiteConfig& cfg);
VerificationReport suite_log_gradient_norm(const SuiteConfig& cfg);

// isometric action and the closed-form distance vs. quadrature
VerificationReport suite_metric_invariance(const SuiteConfig& cfg);

// slope bounds, sandwich estimate, polygon identities
VerificationReport suite_slope_lipschitz(const SuiteConfig& cfg);
VerificationReport suite_sandwich(const SuiteConfig& cfg);
VerificationReport suite_grayson_identity(const SuiteConfig& cfg);
VerificationReport suite_polygon_structure(const SuiteConfig& cfg);
VerificationReport suite_multiplicativity(const SuiteConfig& cfg);
VerificationReport suite_dw_descent(const SuiteConfig& cfg);

// cover sets
VerificationReport suite_cover_equivariance(const SuiteConfig& cfg);
VerificationReport suite_chain_condition(const SuiteConfig& cfg);
VerificationReport suite_comparison(const SuiteConfig& cfg);
VerificationReport suite_cusp_height(const SuiteConfig& cfg);

// flow space
VerificationReport suite_flow_inequalities(const SuiteConfig& cfg);
VerificationReport suite_longness(const SuiteConfig& cfg);

std::vector<VerificationReport> run_cover_suites(const SuiteConfig& cfg);
std::vector<VerificationReport> run_grad_suites(const SuiteConfig& cfg);
std::vector<VerificationReport> run_flow_suites(const SuiteConfig& cfg);
std::vector<VerificationReport> run_all_suites(const SuiteConfig& cfg);

}  // namespace grayson
