#include "pcoef/report.hpp"

namespace pcoef {

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["schema"] = kReportSchema;
  j["command"] = r.command;
  j["parameters"] = r.parameters;
  j["cases_run"] = r.cases_run;
  j["violations"] = r.violations;
  j["worst_slack"] = r.worst_slack ? nlohmann::json(*r.worst_slack) : nlohmann::json(nullptr);
  j["witnesses"] = r.witnesses;
  j["runtime_ms"] = r.runtime_ms;
  j["seed"] = r.seed;
  for (const auto& [key, value] : r.details.items()) j[key] = value;
  return j;
}

std::string render(const VerificationReport& r) { return to_json(r).dump(2) + "\n"; }

}  // namespace pcoef
