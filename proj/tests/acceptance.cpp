// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pcoef/cli.hpp"
#include "pcoef/extremal.hpp"
#include "pcoef/functionals.hpp"
#include "pcoef/grids.hpp"
#include "pcoef/schwarz.hpp"
#include "pcoef/search.hpp"
#include "pcoef/series.hpp"
#include "pcoef/verify.hpp"

using namespace pcoef;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

class Notes {
 public:
  void fail_if(bool bad, const std::string& why) {
    if (bad && first_.empty()) first_ = why;
    pass_ = pass_ && !bad;
  }
  template <typename T>
  Notes& add(const char* key, T v) {
    std::ostringstream s;
    s.precision(3);
    s << key << '=' << v;
    parts_.push_back(s.str());
    return *this;
  }
  Verdict verdict() const {
    std::string d;
    for (const auto& p : parts_) d += (d.empty() ? "" : " ") + p;
    if (!first_.empty()) d += " | first failure: " + first_;
    return {pass_, d};
  }

 private:
  bool pass_ = true;
  std::string first_;
  std::vector<std::string> parts_;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Agreement as stated for the cross-path checks: relative 1e−10, absolute
// 1e−12 while both magnitudes are below 1.
bool paths_agree(Complex a, Complex b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  const double err = std::abs(a - b);
  return scale < 1.0 ? err <= 1e-12 : err <= 1e-10 * scale;
}

std::vector<double> random_simplex(Rng& rng, std::size_t n) {
  std::vector<double> m(n);
  for (auto& x : m) x = rng.exponential();
  const double s = std::accumulate(m.begin(), m.end(), 0.0);
  for (auto& x : m) x /= s;
  return m;
}

Complex pick(Rng& rng, const std::vector<Complex>& v) {
  return v[static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(v.size()) - 1))];
}

bool is_case(const Classification& c, std::initializer_list<EqualityTheorem> ts) {
  const auto* e = std::get_if<EqualityCase>(&c);
  if (!e) return false;
  for (auto t : ts)
    if (e->theorem == t) return true;
  return false;
}

SuiteOutcome sweep_suite(Suite s, std::size_t trials, std::size_t max_n, std::size_t max_k, std::uint64_t seed) {
  VerifyOptions opt;
  opt.suite = s;
  opt.trials = trials;
  opt.max_n = max_n;
  opt.max_k = max_k;
  opt.max_atoms = 8;
  opt.seed = seed;
  return run_suite(opt, Exec::parallel);
}

Verdict ac1() {
  Notes notes;
  const auto t0 = std::chrono::steady_clock::now();
  const auto o = sweep_suite(Suite::caratheodory, 100000, 10, 0, 101);
  Rng rng(1);
  double worst_eq = 0.0;
  for (std::size_t n = 1; n <= 10; ++n) {
    for (int t = 0; t < 20; ++t) {
      const auto mu = extremal_caratheodory(n, rng.uniform(0.0, kTwoPi), random_simplex(rng, n));
      worst_eq = std::max(worst_eq, std::abs(std::abs(coefficient(mu, n)) - 2.0));
    }
  }
  const double secs = seconds_since(t0);
  notes.fail_if(o.violations != 0, std::to_string(o.violations) + " violations");
  notes.fail_if(o.cases_run != 1000000, "unexpected case count");
  notes.fail_if(worst_eq > 1e-12, "equality measure off by " + std::to_string(worst_eq));
  notes.fail_if(secs >= 10.0, "runtime");
  notes.add("cases", o.cases_run).add("worst_slack", *o.worst_slack).add("eq_err", worst_eq).add("s", secs);
  return notes.verdict();
}

Verdict bound_sweep(Suite s, std::size_t max_n, std::size_t max_k, double limit) {
  Notes notes;
  const auto t0 = std::chrono::steady_clock::now();
  const auto o = sweep_suite(s, 100000, max_n, max_k, 202);
  const double secs = seconds_since(t0);
  notes.fail_if(o.violations != 0, std::to_string(o.violations) + " violations");
  notes.fail_if(o.cases_run < 100000 * w_grid().size(), "too few cases");
  notes.fail_if(secs >= limit, "runtime");
  notes.add("cases", o.cases_run).add("worst_slack", *o.worst_slack).add("near_eq", o.near_equality).add("s", secs);
  return notes.verdict();
}

Verdict ac4() {
  Notes notes;
  Rng rng(4);
  const auto grid = w_grid();
  std::size_t herglotz = 0, delsarte = 0, recursion = 0;
  for (int t = 0; t < 10000; ++t) {
    const auto mu = random_measure(static_cast<std::size_t>(rng.integer(1, 8)), rng);
    const Complex w = pick(rng, grid);
    const auto p = coefficients(mu, 10);
    for (std::size_t k = 0; k <= 4; ++k) {
      for (std::size_t n = 1; n <= 6; ++n) {
        const Complex det = A_det(p, k, n, w);
        ++herglotz;
        notes.fail_if(!paths_agree(A_herglotz(mu, k, n, w), det), "A_herglotz disagrees");
        if (n >= k + 1) {
          ++delsarte;
          notes.fail_if(!paths_agree(A_delsarte(p, k, n, w), det), "A_delsarte disagrees");
        }
      }
    }
    if (t % 10 == 0) {
      const std::size_t k = static_cast<std::size_t>(rng.integer(1, 4));
      const std::size_t n = static_cast<std::size_t>(rng.integer(1, 6));
      const Complex lambda = std::polar(1.0, rng.uniform(0.0, kTwoPi));
      ++recursion;
      notes.fail_if(!paths_agree(Q_eval(p, k, n, w, lambda), oracle::q_det(p.coeffs(), k, n, w, lambda)),
                    "Q recursion disagrees with the Q determinant");
    }
  }
  notes.add("herglotz_pairs", herglotz).add("delsarte_pairs", delsarte).add("recursion_checks", recursion);
  return notes.verdict();
}

Verdict ac5() {
  Notes notes;
  const HerglotzMeasure one({{0.0, 1.0}});
  const auto p = coefficients(one, 16);
  double worst = 0.0;
  for (const Complex w : w_grid()) {
    for (std::size_t n = 1; n <= 6; ++n) {
      for (std::size_t k = 0; k <= 6; ++k) {
        const Complex want = 2.0 * std::pow(1.0 - 2.0 * w, static_cast<int>(k));
        // 1e−12 in units of max(1, |value|): above 1 the check is relative.
        const double err = std::abs(A_det(p, k, n, w) - want) / std::max(1.0, std::abs(want));
        worst = std::max(worst, err);
      }
      if (n >= 2) {
        for (std::size_t k = 1; k < n; ++k) {
          const Complex want = 2.0 * (1.0 - 2.0 * w);
          worst = std::max(worst, std::abs(livingston(p, k, n, w) - want) / std::max(1.0, std::abs(want)));
        }
      }
    }
  }
  notes.fail_if(worst > 1e-12, "closed form off");
  notes.add("worst_scaled_err", worst);
  return notes.verdict();
}

Verdict ac6() {
  Notes notes;
  Rng rng(6);
  double worst = 0.0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t k = static_cast<std::size_t>(rng.integer(1, 5));
    const HerglotzMeasure mu({{rng.uniform(0.0, kTwoPi), 0.5}, {rng.uniform(0.0, kTwoPi), 0.5}});
    const auto p = coefficients(mu, 2 * k);
    worst = std::max(worst, std::abs(std::abs(p[2 * k] - p[k] * p[k]) - 2.0));
  }
  notes.fail_if(worst > 1e-12, "two-point value off");
  notes.add("worst_err", worst);
  return notes.verdict();
}

Verdict ac7() {
  Notes notes;
  Rng rng(7);
  const auto grid = w_grid();
  std::vector<Complex> small, large, closed;
  for (const Complex w : grid) {
    if (regime(w) < 1.0 - 1e-9) small.push_back(w);
    if (regime(w) > 1.0 + 1e-9) large.push_back(w);
    if (regime(w) <= 1.0 + 1e-12) closed.push_back(w);
  }
  std::size_t n_small = 0, n_large = 0, n_t2 = 0, n_t3 = 0, n_cls = 0;

  for (std::size_t n = 2; n <= 9; ++n) {
    for (std::size_t k = 1; k < n; ++k) {
      for (int t = 0; t < 3; ++t) {
        const double c = rng.uniform(-kPi, kPi);
        const auto mu = extremal_T1_small_w(k, n, c);
        const auto p = coefficients(mu, n);
        const Complex w = pick(rng, small);
        ++n_small;
        notes.fail_if(std::abs(p[k]) > 1e-12, "small-w: p_k nonzero");
        notes.fail_if(std::abs(std::abs(livingston(p, k, n, w)) - 2.0) > 1e-10, "small-w: not on bound");
        ++n_cls;
        notes.fail_if(!is_case(classify_equality(mu, k, n, w, 1e-8), {EqualityTheorem::T1_lt}), "small-w: classifier");

        const std::size_t d = std::gcd(k, n);
        const auto ml = extremal_T1_large_w(k, n, rng.uniform(0.0, kTwoPi), random_simplex(rng, d));
        const auto pl = coefficients(ml, n);
        const Complex wl = pick(rng, large);
        ++n_large;
        notes.fail_if(std::abs(std::abs(livingston(pl, k, n, wl)) - 2.0 * regime(wl)) > 1e-10 * std::max(1.0, regime(wl)),
                      "large-w: not on bound");
        ++n_cls;
        notes.fail_if(!is_case(classify_equality(ml, k, n, wl, 1e-8), {EqualityTheorem::T1_gt}), "large-w: classifier");
      }
    }
  }

  for (std::size_t k = 1; k <= 4; ++k) {
    for (std::size_t n = 1; n <= 6; ++n) {
      for (int t = 0; t < 5; ++t) {
        const auto mu = extremal_T2(k, n, rng.uniform(0.0, kTwoPi));
        const auto p = coefficients(mu, n + k);
        const Complex w = pick(rng, closed);
        ++n_t2;
        notes.fail_if(std::abs(std::abs(A_det(p, k, n, w)) - 2.0) > 1e-10, "T2: not on bound");
        ++n_cls;
        notes.fail_if(!is_case(classify_equality_A(mu, k, n, w, 1e-8), {EqualityTheorem::T2_lt}), "T2: classifier");
      }
    }
  }

  for (const auto& params : fixtures::t3_tuples(200, 77)) {
    const auto t3 = extremal_T3_detailed(params);
    const Complex w = (1.0 + std::polar(1.0, params.theta)) / 2.0;
    const auto p = coefficients(t3.measure, params.n);
    ++n_t3;
    notes.fail_if(std::abs(livingston(p, params.k, params.n, w) - 2.0 * std::polar(1.0, params.c)) > 1e-10,
                  "T3: functional is not 2e^{ic}");
    if (!t3.merged)
      notes.fail_if(std::abs(t3.mass_first - 0.5 * (1.0 + std::tan(params.theta / 2) * std::tan(params.phi))) > 1e-12,
                    "T3: arc mass differs from the formula");
    ++n_cls;
    notes.fail_if(!is_case(classify_equality(t3.measure, params.k, params.n, w, 1e-8),
                           {EqualityTheorem::T1_eq_i, EqualityTheorem::T1_eq_ii}),
                  "T3: classifier");
  }

  // w = 1: both arc sets carry mass one half.
  double worst_half = 0.0;
  for (int t = 0; t < 50; ++t) {
    const std::size_t k = static_cast<std::size_t>(rng.integer(1, 4));
    const auto t3 = extremal_T3_detailed({k, 2 * k, 0.0, rng.uniform(-1.5, 1.5), 0.0, rng.uniform(-kPi, kPi), {}, {}});
    worst_half = std::max({worst_half, std::abs(t3.mass_first - 0.5), std::abs(t3.mass_second - 0.5)});
    notes.fail_if(!is_case(classify_equality(t3.measure, k, 2 * k, 1.0, 1e-8),
                           {EqualityTheorem::T1_eq_i, EqualityTheorem::T1_eq_ii}),
                  "T3 at w = 1: classifier");
  }
  notes.fail_if(worst_half > 1e-12, "w = 1 arc masses differ from 1/2");
  notes.fail_if(std::min({n_small, n_large, n_t2, n_t3}) < 100, "fewer than 100 tuples for a constructor");
  notes.add("small_w", n_small).add("large_w", n_large).add("T2", n_t2).add("T3", n_t3).add("classified", n_cls);
  notes.add("half_mass_err", worst_half);
  return notes.verdict();
}

Verdict ac8() {
  Notes notes;
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<Complex> ws;
  for (double r : {0.5, 1.0, 2.0})
    for (const Complex w : regime_circle(24, r, r == 1.0 ? 0.0 : 0.5)) ws.push_back(w);

  std::vector<Objective> grid;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const Complex w : ws) {
      for (std::size_t k = 1; k < n; ++k) {
        Objective o;
        o.id = FunctionalId::livingston;
        o.k = k;
        o.n = n;
        o.w = w;
        grid.push_back(o);
      }
      for (std::size_t k = 0; k <= 4; ++k) {
        Objective o;
        o.id = FunctionalId::A;
        o.k = k;
        o.n = n;
        o.w = w;
        grid.push_back(o);
      }
    }
  }
  SearchConfig cfg;
  cfg.restarts = 30;
  cfg.seed = 808;
  const auto results = sweep(grid, cfg, true, Exec::parallel);
  const double secs = seconds_since(t0);

  double max_gap = 0.0, min_gap = 0.0, max_warm = 0.0, max_random = 0.0;
  std::size_t random_within = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    max_gap = std::max(max_gap, r.gap);
    min_gap = std::min(min_gap, r.gap);
    notes.fail_if(!r.warm_start_gap, "missing warm start");
    if (r.warm_start_gap) max_warm = std::max(max_warm, std::abs(*r.warm_start_gap));
    if (r.random_restart_gap) {
      max_random = std::max(max_random, *r.random_restart_gap);
      if (*r.random_restart_gap <= 1e-4) ++random_within;
    }
  }
  notes.fail_if(max_gap > 1e-4, "gap above 1e-4");
  notes.fail_if(min_gap < -1e-9, "negative gap");
  notes.fail_if(max_warm > 1e-10, "warm start not on the bound");
  notes.fail_if(secs >= 300.0, "runtime");
  notes.add("searches", results.size()).add("max_gap", max_gap).add("max_warm_gap", max_warm);
  notes.add("random_only_within_1e-4", std::to_string(random_within) + "/" + std::to_string(results.size()));
  notes.add("s", secs);
  return notes.verdict();
}

Verdict ac9() {
  Notes notes;
  const auto o = sweep_suite(Suite::brown, 10000, 6, 0, 909);
  double worst_eq = 0.0;
  auto hp = CoeffSeries::zeros(13);
  for (std::size_t j = 0; j < hp.size(); ++j) hp[j] = j == 0 ? 1.0 : 2.0;
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t m = 1; m <= 6; ++m)
      for (const double nu : nu_grid(16)) {
        const auto b = brown(hp, n, m, nu);
        worst_eq = std::max(worst_eq, std::abs(b.lhs - b.rhs));
      }
  notes.fail_if(o.violations != 0, std::to_string(o.violations) + " violations");
  notes.fail_if(worst_eq > 1e-12, "half-plane not in equality");
  notes.add("cases", o.cases_run).add("worst_slack", *o.worst_slack).add("half_plane_err", worst_eq);
  return notes.verdict();
}

Verdict ac10() {
  Notes notes;
  Rng rng(10);
  double min_slack = 1e300, max_cross = 0.0, max_rel = 0.0;
  std::size_t checks = 0;
  for (int t = 0; t < 10000; ++t) {
    const auto mu = random_measure(static_cast<std::size_t>(rng.integer(1, 8)), rng);
    const auto a = self_map_from_measure(mu, 4);
    max_rel = std::max(max_rel, coefficient_relations_check(a, coefficients(mu, 4)));
    for (const Complex l : lambda_grid()) {
      for (const auto& x : corollary_values(a, l)) {
        min_slack = std::min(min_slack, x.slack());
        ++checks;
      }
      max_cross = std::max(max_cross, corollary_crosscheck(mu, l));
    }
  }
  notes.fail_if(min_slack < -1e-9, "corollary inequality violated");
  notes.fail_if(max_cross > 1e-10, "crosscheck residual");
  notes.fail_if(max_rel > 1e-12, "coefficient relations residual");
  notes.add("inequality_checks", checks).add("min_slack", min_slack).add("max_crosscheck", max_cross);
  notes.add("max_relations", max_rel);
  return notes.verdict();
}

Verdict ac11() {
  Notes notes;
  Rng rng(11);
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const auto a = oracle::random_series(rng, 9);
    const CoeffSeries s(a);
    const auto q = reciprocal(s, 8);
    for (std::size_t m = 1; m <= 8; ++m) worst = std::max(worst, std::abs(wronski_coefficient(s, m) - q[m]));
  }
  notes.fail_if(worst > 1e-12, "Wronski determinant differs from the recurrence");
  notes.add("series", 1000).add("worst_abs_err", worst);
  return notes.verdict();
}

Verdict ac12() {
  Notes notes;
  const std::vector<std::vector<std::string>> commands{
      {"verify", "--trials", "300", "--max-n", "6", "--seed", "7"},
      {"sharpness", "--functional", "livingston", "--k", "1", "--n", "3", "--grid-points", "6", "--seed", "12"},
      {"sharpness", "--functional", "brown", "--n", "2", "--m", "1", "--grid-points", "6", "--seed", "12"},
      {"table", "--max-k", "3", "--restarts", "2", "--seed", "5"},
  };
  for (const auto& cmd : commands) {
    std::ostringstream o1, o2, o3, e;
    run_cli(cmd, o1, e);
    run_cli(cmd, o2, e);
    auto serial = cmd;
    serial.push_back("--serial");
    run_cli(serial, o3, e);
    notes.fail_if(o1.str().empty(), cmd[0] + " produced no output");
    notes.fail_if(o1.str() != o2.str(), cmd[0] + " differs between runs");
    notes.fail_if(o1.str() != o3.str(), cmd[0] + " differs between serial and parallel kernels");
  }
  notes.add("commands", commands.size());
  return notes.verdict();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"Caratheodory bound and equality", ac1},
      {"generalized Livingston bound sweep", [] { return bound_sweep(Suite::livingston, 8, 0, 60.0); }},
      {"determinant bound sweep", [] { return bound_sweep(Suite::A, 6, 4, 120.0); }},
      {"three-path determinant agreement", ac4},
      {"point-mass closed forms", ac5},
      {"two-point example", ac6},
      {"equality constructors and classifier", ac7},
      {"sharpness certificates", ac8},
      {"Brown bound and half-plane equality", ac9},
      {"self-map corollary", ac10},
      {"Wronski identity", ac11},
      {"CLI determinism", ac12},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    if (!v.pass) ++failed;
    std::printf("%s AC%zu %s: %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
