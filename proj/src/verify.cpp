#include "pcoef/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "pcoef/functionals.hpp"
#include "pcoef/grids.hpp"
#include "pcoef/herglotz.hpp"
#include "pcoef/rng.hpp"
#include "pcoef/schwarz.hpp"

namespace pcoef {

std::string to_string(Suite s) {
  switch (s) {
    case Suite::caratheodory: return "caratheodory";
    case Suite::livingston: return "livingston";
    case Suite::A: return "A";
    case Suite::brown: return "brown";
    case Suite::schwarz: return "schwarz";
    case Suite::paths: return "paths";
  }
  return "unknown";
}

Suite parse_suite(const std::string& name) {
  for (Suite s : all_suites())
    if (to_string(s) == name) return s;
  if (name == "a") return Suite::A;
  throw std::invalid_argument("unknown suite '" + name + "'");
}

std::vector<Suite> all_suites() {
  return {Suite::caratheodory, Suite::livingston, Suite::A, Suite::brown, Suite::schwarz, Suite::paths};
}

void SuiteOutcome::merge(SuiteOutcome&& other, std::size_t max_witnesses) {
  cases_run += other.cases_run;
  violations += other.violations;
  near_equality += other.near_equality;
  if (other.worst_slack && (!worst_slack || *other.worst_slack < *worst_slack)) worst_slack = other.worst_slack;
  for (auto& w : other.witnesses) {
    if (witnesses.size() >= max_witnesses) break;
    witnesses.push_back(std::move(w));
  }
}

namespace {

using nlohmann::json;

const std::vector<Complex>& sweep_w() {
  static const std::vector<Complex> grid = w_grid();
  return grid;
}

const std::vector<double>& sweep_nu() {
  static const std::vector<double> grid = nu_grid(16);
  return grid;
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

class Checker {
 public:
  Checker(const VerifyOptions& opt, SuiteOutcome& out, std::size_t trial, const HerglotzMeasure& mu)
      : opt_(opt), out_(out), trial_(trial), mu_(mu) {}

  // `inequality` marks bound checks, the only ones eligible for near-equality logging.
  template <typename Describe>
  void check(const char* name, double slack, double tol, bool inequality, Describe&& describe) {
    ++out_.cases_run;
    if (!out_.worst_slack || slack < *out_.worst_slack) out_.worst_slack = slack;
    const bool violated = !(slack >= -tol);
    const bool near = inequality && !violated && slack < opt_.near_equality_slack;
    if (violated) ++out_.violations;
    if (near) ++out_.near_equality;
    if ((violated || (near && opt_.log_near_equality)) && out_.witnesses.size() < opt_.max_witnesses) {
      json input = describe();
      input["trial"] = trial_;
      input["measure"] = mu_;
      out_.witnesses.push_back(json{{"check", name},
                                    {"kind", violated ? "violation" : "near_equality"},
                                    {"slack", slack},
                                    {"input", std::move(input)}});
    }
  }

 private:
  const VerifyOptions& opt_;
  SuiteOutcome& out_;
  std::size_t trial_;
  const HerglotzMeasure& mu_;
};

std::size_t draw(Rng& rng, std::size_t lo, std::size_t hi) {
  return static_cast<std::size_t>(rng.integer(static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi)));
}

void caratheodory_trial(Checker& chk, const HerglotzMeasure& mu, const VerifyOptions& opt) {
  const CoeffSeries p = coefficients(mu, opt.max_n);
  for (std::size_t n = 1; n <= opt.max_n; ++n) {
    const double v = std::abs(p[n]);
    chk.check("caratheodory", 2.0 - v, 1e-12, true, [&] { return json{{"n", n}, {"value", v}}; });
  }
}

void livingston_trial(Checker& chk, const HerglotzMeasure& mu, const VerifyOptions& opt, Rng& rng) {
  const std::size_t n = draw(rng, 2, std::max<std::size_t>(opt.max_n, 2));
  const std::size_t k = draw(rng, 1, n - 1);
  const CoeffSeries p = coefficients(mu, n);
  // Non-normalized companion P = x·p + iy.
  const Complex p0{rng.uniform(0.2, 3.0), rng.uniform(-2.0, 2.0)};
  CoeffSeries P = p;
  P[0] = p0;
  for (std::size_t j = 1; j < P.size(); ++j) P[j] *= p0.real();

  for (const Complex w : sweep_w()) {
    const double v = std::abs(livingston(p, k, n, w));
    const double b = bound_livingston(w);
    chk.check("livingston", b - v, 1e-9, true,
              [&] { return json{{"k", k}, {"n", n}, {"w", complex_json(w)}, {"lhs", v}, {"rhs", b}}; });
    const Inequality u = livingston_unnormalized(p0, P, k, n, w);
    chk.check("livingston_unnormalized", u.slack(), 1e-9, true, [&] {
      return json{{"k", k}, {"n", n}, {"w", complex_json(w)}, {"p0", complex_json(p0)}, {"lhs", u.lhs}, {"rhs", u.rhs}};
    });
  }
}

void A_trial(Checker& chk, const HerglotzMeasure& mu, const VerifyOptions& opt, Rng& rng) {
  const std::size_t k = draw(rng, 0, opt.max_k);
  const std::size_t n = draw(rng, 1, std::max<std::size_t>(opt.max_n, 1));
  const CoeffSeries p = coefficients(mu, n + k);
  for (const Complex w : sweep_w()) {
    const double v = std::abs(A_det(p, k, n, w));
    const double b = bound_A(k, w);
    chk.check("A", b - v, 1e-9, true,
              [&] { return json{{"k", k}, {"n", n}, {"w", complex_json(w)}, {"lhs", v}, {"rhs", b}}; });
  }
}

void brown_trial(Checker& chk, const HerglotzMeasure& mu, const VerifyOptions& opt, Rng& rng) {
  const std::size_t hi = std::max<std::size_t>(opt.max_n, 1);
  const std::size_t n = draw(rng, 1, hi);
  const std::size_t m = draw(rng, 1, hi);
  const CoeffSeries p = coefficients(mu, n + m);
  for (const double nu : sweep_nu()) {
    const Inequality b = brown(p, n, m, nu);
    chk.check("brown", b.slack(), 1e-9, true,
              [&] { return json{{"n", n}, {"m", m}, {"nu", nu}, {"lhs", b.lhs}, {"rhs", b.rhs}}; });
  }
  for (const Complex w : sweep_w()) {
    const Inequality g = generalized_shift(p, n, m, w);
    chk.check("generalized_shift", g.slack(), 1e-9, true, [&] {
      return json{{"n", n}, {"m", m}, {"w", complex_json(w)}, {"lhs", g.lhs}, {"rhs", g.rhs}};
    });
  }
}

void schwarz_trial(Checker& chk, const HerglotzMeasure& mu) {
  const CoeffSeries p = coefficients(mu, 4);
  const CoeffSeries a = self_map_from_measure(mu, 4);
  const double a1 = std::abs(a[1]);
  const double a2 = std::abs(a[2]);
  chk.check("schwarz", 1.0 - a1, 1e-9, true, [&] { return json{{"abs_a1", a1}}; });
  chk.check("schwarz_pick", 1.0 - a1 * a1 - a2, 1e-9, true, [&] { return json{{"abs_a1", a1}, {"abs_a2", a2}}; });
  const double rel = coefficient_relations_check(a, p);
  chk.check("coefficient_relations", 1e-12 - rel, 0.0, false, [&] { return json{{"residual", rel}}; });

  static constexpr std::array<const char*, 6> kNames{"self1", "self2", "self3", "self4", "self5", "self6"};
  for (const Complex lambda : lambda_grid()) {
    const auto values = corollary_values(a, lambda);
    for (std::size_t i = 0; i < 6; ++i) {
      chk.check(kNames[i], values[i].slack(), 1e-9, true, [&] {
        return json{{"lambda", complex_json(lambda)}, {"lhs", values[i].lhs}, {"rhs", values[i].rhs}};
      });
    }
    const Inequality warm = schwarz_pick_warmup(a, lambda);
    chk.check("schwarz_pick_lambda", warm.slack(), 1e-9, true, [&] {
      return json{{"lambda", complex_json(lambda)}, {"lhs", warm.lhs}, {"rhs", warm.rhs}};
    });
    const double res = corollary_crosscheck(mu, lambda);
    chk.check("corollary_crosscheck", 1e-10 - res, 0.0, false,
              [&] { return json{{"lambda", complex_json(lambda)}, {"residual", res}}; });
  }
}

void paths_trial(Checker& chk, const HerglotzMeasure& mu, const VerifyOptions& opt, Rng& rng) {
  const auto& grid = sweep_w();
  const std::size_t k = draw(rng, 0, opt.max_k);
  const std::size_t n = draw(rng, 1, std::max<std::size_t>(opt.max_n, 1));
  const Complex w = grid[draw(rng, 0, grid.size() - 1)];
  const CoeffSeries p = coefficients(mu, n + k);
  const Complex det = A_det(p, k, n, w);
  const Complex herg = A_herglotz(mu, k, n, w);
  const double r1 = agreement_ratio(herg, det);
  chk.check("A_herglotz", 1.0 - r1, 0.0, false, [&] {
    return json{{"k", k}, {"n", n}, {"w", complex_json(w)}, {"A_det", complex_json(det)}, {"A_herglotz", complex_json(herg)}};
  });
  if (n >= k + 1) {
    const Complex del = A_delsarte(p, k, n, w);
    const double r2 = agreement_ratio(del, det);
    chk.check("A_delsarte", 1.0 - r2, 0.0, false, [&] {
      return json{{"k", k}, {"n", n}, {"w", complex_json(w)}, {"A_det", complex_json(det)}, {"A_delsarte", complex_json(del)}};
    });
  }
}

std::uint64_t suite_stream(Suite s, std::size_t trial) {
  return static_cast<std::uint64_t>(trial) * 8 + static_cast<std::uint64_t>(s);
}

}  // namespace

SuiteOutcome run_trial(const VerifyOptions& opt, std::size_t trial) {
  Rng rng = Rng::derive(opt.seed, suite_stream(opt.suite, trial));
  const std::size_t atoms = draw(rng, 1, std::max<std::size_t>(opt.max_atoms, 1));
  const HerglotzMeasure mu = random_measure(atoms, rng);
  SuiteOutcome out;
  Checker chk(opt, out, trial, mu);
  switch (opt.suite) {
    case Suite::caratheodory: caratheodory_trial(chk, mu, opt); break;
    case Suite::livingston: livingston_trial(chk, mu, opt, rng); break;
    case Suite::A: A_trial(chk, mu, opt, rng); break;
    case Suite::brown: brown_trial(chk, mu, opt, rng); break;
    case Suite::schwarz: schwarz_trial(chk, mu); break;
    case Suite::paths: paths_trial(chk, mu, opt, rng); break;
  }
  return out;
}

SuiteOutcome run_suite_serial(const VerifyOptions& opt) {
  SuiteOutcome total;
  for (std::size_t i = 0; i < opt.trials; ++i) total.merge(run_trial(opt, i), opt.max_witnesses);
  return total;
}

SuiteOutcome run_suite_parallel(const VerifyOptions& opt) {
  std::vector<SuiteOutcome> per_trial(opt.trials);
  const auto count = static_cast<long>(opt.trials);
#pragma omp parallel for schedule(static)
  for (long i = 0; i < count; ++i)
    per_trial[static_cast<std::size_t>(i)] = run_trial(opt, static_cast<std::size_t>(i));
  SuiteOutcome total;
  for (auto& t : per_trial) total.merge(std::move(t), opt.max_witnesses);
  return total;
}

}  // namespace pcoef
