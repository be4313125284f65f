#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace pcoef {

inline constexpr int kReportSchema = 1;

/// Machine-readable outcome of a CLI run.
struct VerificationReport {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  std::size_t cases_run = 0;
  std::size_t violations = 0;
  std::optional<double> worst_slack;
  std::vector<nlohmann::json> witnesses;
  std::int64_t runtime_ms = 0;
  std::uint64_t seed = 0;
  /// Command-specific fields appended after the common ones.
  nlohmann::json details = nlohmann::json::object();
};

nlohmann::json to_json(const VerificationReport& r);

/// Pretty JSON text with a trailing newline.
std::string render(const VerificationReport& r);

}  // namespace pcoef
