#pragma once

// Sharpness search: maximize the modulus of a functional over N-atom
// probability measures on the circle and report the gap to its bound.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "pcoef/exec.hpp"
#include "pcoef/herglotz.hpp"

namespace pcoef {

enum class FunctionalId { livingston, A, brown };

std::string to_string(FunctionalId id);
/// Accepts "livingston", "A" (or "a"), "brown"; throws std::invalid_argument.
FunctionalId parse_functional(const std::string& name);

/// Functional plus its indices. livingston and A use (k, n, w); brown uses
/// (n, m, nu).
struct Objective {
  FunctionalId id = FunctionalId::livingston;
  std::size_t k = 1;
  std::size_t n = 2;
  std::size_t m = 1;
  Complex w{1.0, 0.0};
  double nu = 0.0;
};

/// Throws std::invalid_argument when the indices are outside the functional's range.
void validate(const Objective& obj);

/// Highest coefficient index the functional reads.
std::size_t objective_degree(const Objective& obj);

/// The theoretical maximum. For brown the searched quantity is lhs − rhs,
/// whose supremum is 0.
double objective_bound(const Objective& obj);

/// Searched quantity on a coefficient series: |livingston|, |A_det|, or the
/// brown difference lhs − rhs.
double objective_value(const Objective& obj, const CoeffSeries& p);
double objective_value(const Objective& obj, const HerglotzMeasure& mu);

/// Extremal measure from the equality constructors for this objective and
/// regime, when one applies.
std::optional<HerglotzMeasure> warm_start_measure(const Objective& obj);

struct SearchConfig {
  std::size_t atom_count = 2;
  std::size_t restarts = 30;
  std::size_t max_iterations = 6000;
  double step_tolerance = 1e-10;
  std::uint64_t seed = 0;
  bool warm_start = true;  // restart 0 starts from warm_start_measure()

  /// Defaults with atom_count = n + k (n + m for brown).
  static SearchConfig for_objective(const Objective& obj);
};

struct SearchResult {
  HerglotzMeasure best_measure{{{0.0, 1.0}}};
  double best_value = 0.0;
  double bound = 0.0;
  double gap = 0.0;  // bound − best_value, never clamped
  std::size_t iterations_used = 0;
  std::size_t restart_index = 0;
  /// Gap of the constructor measure before any optimization step.
  std::optional<double> warm_start_gap;
  /// Best gap over the randomly started restarts only.
  std::optional<double> random_restart_gap;
};

/// Independent Nelder-Mead runs over 2·atom_count − 1 parameters (angles and
/// softmax mass logits), best kept. Ties go to the lowest restart index, so
/// the result is identical for either execution policy.
SearchResult maximize(const Objective& obj, const SearchConfig& cfg, Exec exec = Exec::parallel);

/// maximize() per grid point with seed cfg.seed + index; results in grid order.
std::vector<SearchResult> sweep(std::span<const Objective> grid, const SearchConfig& cfg,
                                Exec exec = Exec::parallel);

/// Same as sweep() but with atom_count taken from SearchConfig::for_objective
/// per point when use_default_atoms is set.
std::vector<SearchResult> sweep(std::span<const Objective> grid, const SearchConfig& cfg,
                                bool use_default_atoms, Exec exec = Exec::parallel);

void to_json(nlohmann::json& j, const Objective& obj);
void to_json(nlohmann::json& j, const SearchResult& r);

}  // namespace pcoef
