#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace grayson {

struct ReportViolation {
  int sample = -1;
  std::string message;
  double margin = 0;  // negative margins quantify how badly a bound failed
};

// Outcome of one sampled verification suite. Violations are content, not
// errors; input_error marks a malformed request and uncertified marks an
// enumeration that could not be certified complete.
struct VerificationReport {
  std::string lemma;
  int samples = 0;
  std::vector<ReportViolation> violations;
  std::vector<std::pair<std::string, double>> stats;  // insertion-ordered
  bool input_error = false;
  bool uncertified = false;
  std::string error_message;

  bool passed() const {
    return !input_error && !uncertified && violations.empty();
  }
  void stat(const std::string& key, double value) {
    stats.emplace_back(key, value);
  }
  void violation(int sample, std::string message, double margin) {
    violations.push_back({sample, std::move(message), margin});
  }
};

nlohmann::ordered_json to_json(const VerificationReport& r);
nlohmann::ordered_json to_json(const std::vector<VerificationReport>& suites);

}  // namespace grayson
