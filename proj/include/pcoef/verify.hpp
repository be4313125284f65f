#pragma once

// Randomized property sweeps over measure-generated coefficient sequences.
// Trial i draws from its own stream Rng::derive(seed, i), so outcomes do not
// depend on execution order; the OpenMP kernels merge per-trial outcomes in
// trial order and must match the serial kernels exactly.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pcoef/exec.hpp"

namespace pcoef {

enum class Suite { caratheodory, livingston, A, brown, schwarz, paths };

std::string to_string(Suite s);
Suite parse_suite(const std::string& name);
/// Every suite, in report order.
std::vector<Suite> all_suites();

struct VerifyOptions {
  Suite suite = Suite::livingston;
  std::size_t trials = 1000;
  std::size_t max_n = 6;
  std::size_t max_k = 4;
  std::size_t max_atoms = 8;
  std::uint64_t seed = 0;
  bool log_near_equality = false;
  double near_equality_slack = 1e-3;
  std::size_t max_witnesses = 20;
};

struct SuiteOutcome {
  std::size_t cases_run = 0;
  std::size_t violations = 0;
  std::optional<double> worst_slack;  // min over cases of rhs − lhs (or tolerance − error)
  std::size_t near_equality = 0;
  std::vector<nlohmann::json> witnesses;

  /// Folds another outcome in, keeping the witness cap.
  void merge(SuiteOutcome&& other, std::size_t max_witnesses);
  friend bool operator==(const SuiteOutcome&, const SuiteOutcome&) = default;
};

/// Runs one trial of a suite (exposed for tests and benchmarks).
SuiteOutcome run_trial(const VerifyOptions& opt, std::size_t trial);

SuiteOutcome run_suite_serial(const VerifyOptions& opt);
SuiteOutcome run_suite_parallel(const VerifyOptions& opt);
inline SuiteOutcome run_suite(const VerifyOptions& opt, Exec exec = Exec::parallel) {
  return exec == Exec::parallel ? run_suite_parallel(opt) : run_suite_serial(opt);
}

}  // namespace pcoef
