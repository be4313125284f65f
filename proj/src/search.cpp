#include "pcoef/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "pcoef/extremal.hpp"
#include "pcoef/functionals.hpp"
#include "pcoef/nelder_mead.hpp"
#include "pcoef/rng.hpp"

namespace pcoef {

std::string to_string(FunctionalId id) {
  switch (id) {
    case FunctionalId::livingston: return "livingston";
    case FunctionalId::A: return "A";
    case FunctionalId::brown: return "brown";
  }
  return "unknown";
}

FunctionalId parse_functional(const std::string& name) {
  if (name == "livingston") return FunctionalId::livingston;
  if (name == "A" || name == "a") return FunctionalId::A;
  if (name == "brown") return FunctionalId::brown;
  throw std::invalid_argument("unknown functional '" + name + "' (expected livingston, A or brown)");
}

void validate(const Objective& obj) {
  switch (obj.id) {
    case FunctionalId::livingston:
      if (obj.k < 1 || obj.k >= obj.n) throw std::invalid_argument("livingston requires 1 <= k <= n-1");
      break;
    case FunctionalId::A:
      if (obj.n < 1) throw std::invalid_argument("A requires n >= 1");
      break;
    case FunctionalId::brown:
      if (obj.n < 1 || obj.m < 1) throw std::invalid_argument("brown requires n >= 1 and m >= 1");
      break;
  }
}

std::size_t objective_degree(const Objective& obj) {
  switch (obj.id) {
    case FunctionalId::livingston: return obj.n;
    case FunctionalId::A: return obj.n + obj.k;
    case FunctionalId::brown: return obj.n + obj.m;
  }
  return obj.n;
}

double objective_bound(const Objective& obj) {
  switch (obj.id) {
    case FunctionalId::livingston: return bound_livingston(obj.w);
    case FunctionalId::A: return bound_A(obj.k, obj.w);
    case FunctionalId::brown: return 0.0;
  }
  return 0.0;
}

double objective_value(const Objective& obj, const CoeffSeries& p) {
  switch (obj.id) {
    case FunctionalId::livingston: return std::abs(livingston(p, obj.k, obj.n, obj.w));
    case FunctionalId::A: return std::abs(A_det(p, obj.k, obj.n, obj.w));
    case FunctionalId::brown: {
      const auto b = brown(p, obj.n, obj.m, obj.nu);
      return b.lhs - b.rhs;
    }
  }
  return 0.0;
}

double objective_value(const Objective& obj, const HerglotzMeasure& mu) {
  return objective_value(obj, coefficients(mu, objective_degree(obj)));
}

std::optional<HerglotzMeasure> warm_start_measure(const Objective& obj) {
  const HerglotzMeasure point({{0.0, 1.0}});
  const bool small_w = regime(obj.w) < 1.0;
  switch (obj.id) {
    case FunctionalId::livingston:
      if (small_w) return extremal_T1_small_w(obj.k, obj.n, 0.0);
      return extremal_T1_large_w(obj.k, obj.n, 0.0, uniform_masses(std::gcd(obj.k, obj.n)));
    case FunctionalId::A:
      if (!small_w) return point;
      if (obj.k == 0) return extremal_caratheodory(obj.n, 0.0, uniform_masses(obj.n));
      return extremal_T2(obj.k, obj.n, 0.0);
    case FunctionalId::brown:
      return point;
  }
  return std::nullopt;
}

SearchConfig SearchConfig::for_objective(const Objective& obj) {
  SearchConfig cfg;
  cfg.atom_count = obj.id == FunctionalId::brown ? obj.n + obj.m : obj.n + obj.k;
  cfg.atom_count = std::max<std::size_t>(cfg.atom_count, 1);
  return cfg;
}

namespace {

// Parameter layout: atom_count angles, then atom_count − 1 mass logits; the
// last atom's logit is pinned at 0.
class MeasureObjective {
 public:
  MeasureObjective(const Objective& obj, std::size_t atoms)
      : obj_(obj), atoms_(atoms), angles_(atoms), masses_(atoms),
        coeffs_(CoeffSeries::zeros(objective_degree(obj) + 1)), raw_(objective_degree(obj) + 1) {}

  std::size_t dimension() const { return 2 * atoms_ - 1; }

  void unpack(std::span<const double> x) {
    std::copy_n(x.begin(), atoms_, angles_.begin());
    double top = 0.0;
    for (std::size_t i = 0; i + 1 < atoms_; ++i) top = std::max(top, x[atoms_ + i]);
    double total = 0.0;
    for (std::size_t i = 0; i < atoms_; ++i) {
      const double logit = i + 1 < atoms_ ? x[atoms_ + i] : 0.0;
      masses_[i] = std::exp(logit - top);
      total += masses_[i];
    }
    for (auto& m : masses_) m /= total;
  }

  double value(std::span<const double> x) {
    unpack(x);
    coefficients_raw(angles_, masses_, raw_);
    for (std::size_t j = 0; j < raw_.size(); ++j) coeffs_[j] = raw_[j];
    return objective_value(obj_, coeffs_);
  }

  HerglotzMeasure measure(std::span<const double> x) {
    unpack(x);
    std::vector<UnitAtom> atoms(atoms_);
    for (std::size_t i = 0; i < atoms_; ++i) atoms[i] = {angles_[i], masses_[i]};
    return HerglotzMeasure(std::move(atoms));
  }

 private:
  Objective obj_;
  std::size_t atoms_;
  std::vector<double> angles_;
  std::vector<double> masses_;
  CoeffSeries coeffs_;
  std::vector<Complex> raw_;
};

// Encodes a measure with at most `atoms` atoms; unused slots get negligible mass.
std::vector<double> encode(const HerglotzMeasure& mu, std::size_t atoms) {
  constexpr double kNegligibleLogit = -80.0;
  const auto& src = mu.atoms();
  const std::size_t pad = atoms - src.size();
  std::vector<double> angles(atoms), logits(atoms);
  for (std::size_t i = 0; i < atoms; ++i) {
    if (i < pad) {
      angles[i] = src.front().angle;
      logits[i] = kNegligibleLogit;
    } else {
      angles[i] = src[i - pad].angle;
      logits[i] = std::log(src[i - pad].mass);
    }
  }
  std::vector<double> x(angles);
  for (std::size_t i = 0; i + 1 < atoms; ++i) x.push_back(logits[i] - logits.back());
  return x;
}

struct RestartOutcome {
  std::vector<double> x;
  double value = -std::numeric_limits<double>::infinity();
  std::size_t iterations = 0;
  bool warm = false;
};

RestartOutcome run_restart(const Objective& obj, const SearchConfig& cfg, std::size_t index,
                           const std::optional<HerglotzMeasure>& warm) {
  MeasureObjective f(obj, cfg.atom_count);
  RestartOutcome out;
  if (index == 0 && warm) {
    out.x = encode(*warm, cfg.atom_count);
    out.warm = true;
  } else {
    Rng rng = Rng::derive(cfg.seed, index);
    for (std::size_t i = 0; i < cfg.atom_count; ++i) out.x.push_back(rng.uniform(0.0, kTwoPi));
    for (std::size_t i = 0; i + 1 < cfg.atom_count; ++i) out.x.push_back(rng.normal());
  }
  auto neg = [&](const std::vector<double>& x) { return -f.value(x); };
  out.value = -neg(out.x);

  NelderMeadOptions opt;
  opt.step_tolerance = cfg.step_tolerance;
  opt.initial_step = 0.5;
  // A converged simplex is rebuilt around its best vertex with a smaller
  // step until that stops paying off.
  for (int round = 0; round < 4 && out.iterations < cfg.max_iterations; ++round) {
    opt.max_iterations = cfg.max_iterations - out.iterations;
    auto res = nelder_mead(neg, out.x, opt);
    out.iterations += std::max<std::size_t>(res.iterations, 1);
    const double improved = -res.value;
    const bool progress = improved > out.value + 1e-15;
    if (improved > out.value) {
      out.value = improved;
      out.x = std::move(res.x);
    }
    if (!progress && round > 0) break;
    opt.initial_step = 0.05;
  }
  return out;
}

}  // namespace

SearchResult maximize(const Objective& obj, const SearchConfig& cfg, Exec exec) {
  validate(obj);
  if (cfg.atom_count < 1) throw std::invalid_argument("maximize: atom_count must be positive");
  if (cfg.restarts < 1) throw std::invalid_argument("maximize: restarts must be positive");
  if (!(cfg.step_tolerance > 0.0)) throw std::invalid_argument("maximize: step_tolerance must be positive");

  std::optional<HerglotzMeasure> warm;
  if (cfg.warm_start) {
    warm = warm_start_measure(obj);
    if (warm && warm->size() > cfg.atom_count) warm.reset();
  }

  std::vector<RestartOutcome> outcomes(cfg.restarts);
  const auto count = static_cast<long>(cfg.restarts);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i)
      outcomes[static_cast<std::size_t>(i)] = run_restart(obj, cfg, static_cast<std::size_t>(i), warm);
  } else {
    for (long i = 0; i < count; ++i)
      outcomes[static_cast<std::size_t>(i)] = run_restart(obj, cfg, static_cast<std::size_t>(i), warm);
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i < outcomes.size(); ++i)
    if (outcomes[i].value > outcomes[best].value) best = i;

  SearchResult result;
  MeasureObjective f(obj, cfg.atom_count);
  result.best_measure = f.measure(outcomes[best].x);
  result.best_value = objective_value(obj, result.best_measure);
  result.bound = objective_bound(obj);
  result.gap = result.bound - result.best_value;
  result.iterations_used = outcomes[best].iterations;
  result.restart_index = best;
  if (warm) result.warm_start_gap = result.bound - objective_value(obj, *warm);
  for (const auto& o : outcomes) {
    if (o.warm) continue;
    const double g = result.bound - o.value;
    if (!result.random_restart_gap || g < *result.random_restart_gap) result.random_restart_gap = g;
  }
  return result;
}

std::vector<SearchResult> sweep(std::span<const Objective> grid, const SearchConfig& cfg,
                                bool use_default_atoms, Exec exec) {
  if (grid.empty()) throw std::invalid_argument("sweep: grid is empty");
  std::vector<SearchResult> results(grid.size());
  auto one = [&](std::size_t i) {
    SearchConfig local = cfg;
    if (use_default_atoms) local.atom_count = SearchConfig::for_objective(grid[i]).atom_count;
    local.seed = cfg.seed + i;
    results[i] = maximize(grid[i], local, Exec::serial);
  };
  const auto count = static_cast<long>(grid.size());
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) one(static_cast<std::size_t>(i));
  } else {
    for (long i = 0; i < count; ++i) one(static_cast<std::size_t>(i));
  }
  return results;
}

std::vector<SearchResult> sweep(std::span<const Objective> grid, const SearchConfig& cfg, Exec exec) {
  return sweep(grid, cfg, false, exec);
}

void to_json(nlohmann::json& j, const Objective& obj) {
  j = nlohmann::json{{"functional", to_string(obj.id)}};
  if (obj.id == FunctionalId::brown) {
    j["n"] = obj.n;
    j["m"] = obj.m;
    j["nu"] = obj.nu;
  } else {
    j["k"] = obj.k;
    j["n"] = obj.n;
    j["w"] = {obj.w.real(), obj.w.imag()};
  }
}

void to_json(nlohmann::json& j, const SearchResult& r) {
  j = nlohmann::json{{"best_measure", r.best_measure},
                     {"best_value", r.best_value},
                     {"bound", r.bound},
                     {"gap", r.gap},
                     {"iterations_used", r.iterations_used},
                     {"restart_index", r.restart_index}};
  if (r.warm_start_gap) j["warm_start_gap"] = *r.warm_start_gap;
  if (r.random_restart_gap) j["random_restart_gap"] = *r.random_restart_gap;
}

}  // namespace pcoef
