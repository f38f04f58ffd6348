#include "grayson/report.hpp"

namespace grayson {

nlohmann::ordered_json to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["lemma"] = r.lemma;
  j["samples"] = r.samples;
  nlohmann::ordered_json viol = nlohmann::ordered_json::array();
  for (const auto& v : r.violations) {
    nlohmann::ordered_json e;
    e["sample"] = v.sample;
    e["message"] = v.message;
    e["margin"] = v.margin;
    viol.push_back(std::move(e));
  }
  j["violations"] = std::move(viol);
  nlohmann::ordered_json stats;
  for (const auto& [k, v] : r.stats) stats[k] = v;
  j["stats"] = std::move(stats);
  if (r.input_error) {
    j["input_error"] = true;
    j["error_message"] = r.error_message;
  }
  if (r.uncertified) {
    j["uncertified"] = true;
    j["error_message"] = r.error_message;
  }
  j["passed"] = r.passed();
  return j;
}

nlohmann::ordered_json to_json(const std::vector<VerificationReport>& suites) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : suites) arr.push_back(to_json(r));
  j["suites"] = std::move(arr);
  return j;
}

}  // namespace grayson
