#include "pcoef/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pcoef/extremal.hpp"
#include "pcoef/functionals.hpp"
#include "pcoef/grids.hpp"
#include "pcoef/report.hpp"
#include "pcoef/search.hpp"
#include "pcoef/verify.hpp"

namespace pcoef {

namespace {

using nlohmann::json;

double parse_real(std::string_view s, const std::string& whole) {
  if (s.empty()) throw std::invalid_argument("malformed complex number '" + whole + "'");
  if (s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("malformed complex number '" + whole + "'");
  return v;
}

}  // namespace

Complex parse_complex(const std::string& text) {
  std::string s;
  std::copy_if(text.begin(), text.end(), std::back_inserter(s), [](char c) { return c != ' '; });
  if (s.empty()) throw std::invalid_argument("empty complex number");
  if (s.back() != 'i' && s.back() != 'j') return {parse_real(s, text), 0.0};

  const std::string body = s.substr(0, s.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  const std::string re = split == std::string::npos ? "" : body.substr(0, split);
  std::string im = split == std::string::npos ? body : body.substr(split);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return {re.empty() ? 0.0 : parse_real(re, text), parse_real(im, text)};
}

namespace {

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_real(item, text));
  return out;
}

struct Common {
  std::uint64_t seed = 0;
  std::string json_path;
  bool timing = false;
  bool serial = false;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--seed", c.seed, "Seed for all randomness");
  sub->add_option("--json", c.json_path, "Also write the JSON report to this path");
  sub->add_flag("--timing", c.timing, "Record wall-clock runtime_ms (breaks byte-identical output)");
  sub->add_flag("--serial", c.serial, "Use the serial reference kernels");
}

class Stopwatch {
 public:
  std::int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(const std::string& text, const Common& c, std::ostream& out) {
  out << text;
  if (!c.json_path.empty()) {
    std::ofstream file(c.json_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + c.json_path);
    file << text;
  }
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all";
  std::size_t trials = 1000;
  std::size_t max_n = 6;
  std::size_t max_k = 4;
  std::size_t max_atoms = 8;
  std::size_t max_witnesses = 20;
  bool log_near = false;
};

int cmd_verify(const VerifyArgs& a, const Common& c, std::ostream& out) {
  const Stopwatch clock;
  std::vector<Suite> suites = a.suite == "all" ? all_suites() : std::vector<Suite>{parse_suite(a.suite)};

  VerificationReport report;
  report.command = "verify";
  report.seed = c.seed;
  report.parameters = {{"suite", a.suite},       {"trials", a.trials},
                       {"max_n", a.max_n},       {"max_k", a.max_k},
                       {"max_atoms", a.max_atoms}, {"log_near_equality", a.log_near}};

  SuiteOutcome total;
  json per_suite = json::object();
  for (Suite s : suites) {
    VerifyOptions opt;
    opt.suite = s;
    opt.trials = a.trials;
    opt.max_n = a.max_n;
    opt.max_k = a.max_k;
    opt.max_atoms = a.max_atoms;
    opt.seed = c.seed;
    opt.log_near_equality = a.log_near;
    opt.max_witnesses = a.max_witnesses;
    SuiteOutcome o = run_suite(opt, c.serial ? Exec::serial : Exec::parallel);
    per_suite[to_string(s)] = {{"cases_run", o.cases_run},
                               {"violations", o.violations},
                               {"worst_slack", o.worst_slack ? json(*o.worst_slack) : json(nullptr)},
                               {"near_equality", o.near_equality}};
    total.merge(std::move(o), a.max_witnesses);
  }
  report.cases_run = total.cases_run;
  report.violations = total.violations;
  report.worst_slack = total.worst_slack;
  report.witnesses = std::move(total.witnesses);
  report.details = {{"near_equality", total.near_equality}, {"suites", per_suite}};
  if (c.timing) report.runtime_ms = clock.ms();
  emit(render(report), c, out);
  return report.violations == 0 ? kExitPass : kExitViolation;
}

// ---- sharpness ------------------------------------------------------------

struct SharpnessArgs {
  std::string functional = "livingston";
  std::size_t k = 1;
  std::size_t n = 2;
  std::size_t m = 1;
  std::vector<double> nu;
  std::vector<std::string> w;
  std::string grid = "regimes";
  std::size_t grid_points = 24;
  std::size_t atoms = 0;
  std::size_t restarts = 30;
  std::size_t max_iter = 6000;
  double step_tol = 1e-10;
  double gap_tol = 1e-4;
  bool no_warm = false;
};

std::vector<Objective> sharpness_grid(const SharpnessArgs& a) {
  Objective base;
  base.id = parse_functional(a.functional);
  base.k = a.k;
  base.n = a.n;
  base.m = a.m;
  std::vector<Objective> grid;
  if (base.id == FunctionalId::brown) {
    const auto nus = a.nu.empty() ? nu_grid(a.grid_points) : a.nu;
    for (double nu : nus) {
      Objective o = base;
      o.nu = nu;
      grid.push_back(o);
    }
  } else {
    std::vector<Complex> ws;
    for (const auto& text : a.w) ws.push_back(parse_complex(text));
    if (ws.empty()) {
      if (a.grid == "boundary") {
        ws = regime_circle(a.grid_points, 1.0);
      } else if (a.grid == "regimes") {
        for (double radius : {0.5, 1.0, 2.0})
          for (const auto& w : regime_circle(a.grid_points, radius, radius == 1.0 ? 0.0 : 0.5)) ws.push_back(w);
      } else {
        throw std::invalid_argument("unknown grid '" + a.grid + "' (expected regimes or boundary)");
      }
    }
    for (const auto& w : ws) {
      Objective o = base;
      o.w = w;
      grid.push_back(o);
    }
  }
  for (const auto& o : grid) validate(o);
  return grid;
}

int cmd_sharpness(const SharpnessArgs& a, const Common& c, std::ostream& out) {
  const Stopwatch clock;
  const auto grid = sharpness_grid(a);
  SearchConfig cfg;
  cfg.atom_count = a.atoms;
  cfg.restarts = a.restarts;
  cfg.max_iterations = a.max_iter;
  cfg.step_tolerance = a.step_tol;
  cfg.seed = c.seed;
  cfg.warm_start = !a.no_warm;
  const auto results = sweep(grid, cfg, a.atoms == 0, c.serial ? Exec::serial : Exec::parallel);

  VerificationReport report;
  report.command = "sharpness";
  report.seed = c.seed;
  report.parameters = {{"functional", a.functional}, {"k", a.k},           {"n", a.n},
                       {"m", a.m},                   {"grid", a.grid},     {"grid_points", a.grid_points},
                       {"atoms", a.atoms},           {"restarts", a.restarts}, {"max_iterations", a.max_iter},
                       {"step_tolerance", a.step_tol}, {"gap_tol", a.gap_tol}, {"warm_start", !a.no_warm}};
  json rows = json::array();
  double max_gap = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    json row{{"objective", grid[i]}, {"result", r}};
    const bool negative = r.gap < -1e-9;
    const bool loose = r.gap > a.gap_tol;
    ++report.cases_run;
    if (!report.worst_slack || r.gap < *report.worst_slack) report.worst_slack = r.gap;
    max_gap = std::max(max_gap, r.gap);
    if (negative || loose) {
      ++report.violations;
      json witness = row;
      witness["kind"] = negative ? "negative_gap" : "gap_above_tolerance";
      report.witnesses.push_back(std::move(witness));
    }
    rows.push_back(std::move(row));
  }
  report.details = {{"max_gap", max_gap}, {"results", std::move(rows)}};
  if (c.timing) report.runtime_ms = clock.ms();
  emit(render(report), c, out);
  return report.violations == 0 ? kExitPass : kExitViolation;
}

// ---- extremal -------------------------------------------------------------

struct ExtremalArgs {
  std::string which = "t1-small";
  std::size_t k = 1;
  std::size_t n = 2;
  double phi = 0.0;
  double theta = 0.0;
  double psi = 0.0;
  double c = 0.0;
  double alpha = 0.0;
  std::string masses;
  std::string masses_b;
  std::string w;
  double tol = 1e-8;
};

int cmd_extremal(const ExtremalArgs& a, const Common& c, std::ostream& out) {
  const Stopwatch clock;
  const std::vector<double> masses = a.masses.empty() ? std::vector<double>{} : parse_list(a.masses);
  const std::vector<double> masses_b = a.masses_b.empty() ? std::vector<double>{} : parse_list(a.masses_b);
  auto w_or = [&](Complex fallback) { return a.w.empty() ? fallback : parse_complex(a.w); };

  VerificationReport report;
  report.command = "extremal";
  report.seed = c.seed;
  report.parameters = {{"case", a.which}, {"k", a.k}, {"n", a.n}};
  json details;

  std::optional<HerglotzMeasure> mu;
  double value = 0.0;
  double bound = 2.0;
  Classification cls = NoEquality{};
  if (a.which == "caratheodory") {
    report.parameters["phi"] = a.phi;
    mu = extremal_caratheodory(a.n, a.phi, masses.empty() ? uniform_masses(a.n) : masses);
    value = std::abs(coefficient(*mu, a.n));
    cls = classify_caratheodory(*mu, a.n, a.tol);
  } else if (a.which == "t1-small" || a.which == "t1-large" || a.which == "t3") {
    Complex w;
    if (a.which == "t1-small") {
      report.parameters["c"] = a.c;
      w = w_or({0.5, 0.0});
      mu = extremal_T1_small_w(a.k, a.n, a.c);
    } else if (a.which == "t1-large") {
      report.parameters["alpha"] = a.alpha;
      w = w_or({2.0, 0.0});
      const std::size_t d = std::gcd(a.k, a.n);
      mu = extremal_T1_large_w(a.k, a.n, a.alpha, masses.empty() ? uniform_masses(d) : masses);
    } else {
      T3Params p{a.k, a.n, a.theta, a.phi, a.psi, a.c, masses, masses_b};
      report.parameters.update({{"theta", a.theta}, {"phi", a.phi}, {"psi", a.psi}, {"c", a.c}});
      const T3Construction t3 = extremal_T3_detailed(p);
      w = (1.0 + std::polar(1.0, a.theta)) / 2.0;
      mu = t3.measure;
      details["arc_masses"] = {t3.mass_first, t3.mass_second};
      details["mass_formula"] = t3.merged ? json(nullptr) : json(t3_mass_formula(a.theta, a.phi));
      details["merged_arcs"] = t3.merged;
      details["k_used"] = t3.k_used;
    }
    report.parameters["w"] = complex_json(w);
    const CoeffSeries p = coefficients(*mu, a.n);
    if (a.k < 1 || a.k >= a.n) throw std::invalid_argument("requires 1 <= k <= n-1");
    value = std::abs(livingston(p, a.k, a.n, w));
    bound = bound_livingston(w);
    details["p_k"] = complex_json(p[a.k]);
    details["functional"] = complex_json(livingston(p, a.k, a.n, w));
    cls = classify_equality(*mu, a.k, a.n, w, a.tol);
  } else if (a.which == "t2") {
    report.parameters["phi"] = a.phi;
    const Complex w = w_or({0.5, 0.0});
    report.parameters["w"] = complex_json(w);
    mu = extremal_T2(a.k, a.n, a.phi);
    const CoeffSeries p = coefficients(*mu, a.n + a.k);
    value = std::abs(A_det(p, a.k, a.n, w));
    bound = bound_A(a.k, w);
    cls = classify_equality_A(*mu, a.k, a.n, w, a.tol);
  } else {
    throw std::invalid_argument("unknown case '" + a.which + "' (expected caratheodory, t1-small, t1-large, t2, t3)");
  }

  const double gap = bound - value;
  report.cases_run = 1;
  report.worst_slack = gap;
  report.violations = std::abs(gap) <= 1e-10 ? 0 : 1;
  details["measure"] = *mu;
  details["value"] = value;
  details["bound"] = bound;
  details["gap"] = gap;
  details["classification"] = cls;
  if (report.violations > 0) report.witnesses.push_back(json{{"kind", "equality_not_attained"}, {"gap", gap}});
  report.details = std::move(details);
  if (c.timing) report.runtime_ms = clock.ms();
  emit(render(report), c, out);
  return report.violations == 0 ? kExitPass : kExitViolation;
}

// ---- table ----------------------------------------------------------------

struct TableArgs {
  std::size_t max_k = 3;
  std::size_t k = 1;
  std::size_t n = 2;
  std::size_t restarts = 4;
  double gap_tol = 1e-4;
};

int cmd_table(const TableArgs& a, const Common& c, std::ostream& out) {
  const Stopwatch clock;
  std::vector<Objective> grid;
  for (const Complex w : w_grid()) {
    Objective o;
    o.id = FunctionalId::livingston;
    o.k = a.k;
    o.n = a.n;
    o.w = w;
    validate(o);
    grid.push_back(o);
  }
  SearchConfig cfg;
  cfg.restarts = a.restarts;
  cfg.seed = c.seed;
  const auto results = sweep(grid, cfg, true, c.serial ? Exec::serial : Exec::parallel);

  std::ostringstream csv;
  csv << "re_w,im_w,abs_1m2w,bound_T1";
  for (std::size_t k = 1; k <= a.max_k; ++k) csv << ",bound_T2_" << k;
  csv << ",best_found,gap\n";
  std::size_t violations = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Complex w = grid[i].w;
    csv << format_double(w.real()) << ',' << format_double(w.imag()) << ',' << format_double(regime(w)) << ','
        << format_double(bound_livingston(w));
    for (std::size_t k = 1; k <= a.max_k; ++k) csv << ',' << format_double(bound_A(k, w));
    csv << ',' << format_double(results[i].best_value) << ',' << format_double(results[i].gap) << '\n';
    if (results[i].gap < -1e-9 || results[i].gap > a.gap_tol) ++violations;
  }
  out << csv.str();
  if (!c.json_path.empty()) {
    VerificationReport report;
    report.command = "table";
    report.seed = c.seed;
    report.parameters = {{"max_k", a.max_k}, {"k", a.k}, {"n", a.n}, {"restarts", a.restarts}, {"gap_tol", a.gap_tol}};
    report.cases_run = grid.size();
    report.violations = violations;
    for (const auto& r : results)
      if (!report.worst_slack || r.gap < *report.worst_slack) report.worst_slack = r.gap;
    report.details = {{"csv", csv.str()}};
    if (c.timing) report.runtime_ms = clock.ms();
    std::ofstream file(c.json_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + c.json_path);
    file << render(report);
  }
  return violations == 0 ? kExitPass : kExitViolation;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coefficient inequalities for functions with positive real part"};
  app.name("pcoef");
  app.require_subcommand(1);

  Common common_verify, common_sharp, common_ext, common_table;
  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Randomized property sweeps of the coefficient bounds");
  add_common(verify, common_verify);
  verify->add_option("--suite", va.suite, "all, caratheodory, livingston, A, brown, schwarz or paths");
  verify->add_option("--trials", va.trials, "Random measures per suite");
  verify->add_option("--max-n", va.max_n, "Largest n");
  verify->add_option("--max-k", va.max_k, "Largest k for determinant functionals");
  verify->add_option("--max-atoms", va.max_atoms, "Largest atom count of random measures");
  verify->add_option("--max-witnesses", va.max_witnesses, "Cap on logged witnesses");
  verify->add_flag("--log-near-equality", va.log_near, "Log witnesses with slack below 1e-3");

  SharpnessArgs sa;
  auto* sharp = app.add_subcommand("sharpness", "Search for measures attaining the bounds");
  add_common(sharp, common_sharp);
  sharp->add_option("--functional", sa.functional, "livingston, A or brown");
  sharp->add_option("--k", sa.k);
  sharp->add_option("--n", sa.n);
  sharp->add_option("--m", sa.m, "Shift for brown");
  sharp->add_option("--nu", sa.nu, "Rotation(s) for brown");
  sharp->add_option("--w", sa.w, "Complex parameter(s), format a+bi");
  sharp->add_option("--grid", sa.grid, "w grid when --w is absent: regimes or boundary");
  sharp->add_option("--grid-points", sa.grid_points, "Points per regime (or nu values for brown)");
  sharp->add_option("--atoms", sa.atoms, "Atom count (default n+k, or n+m for brown)");
  sharp->add_option("--restarts", sa.restarts);
  sharp->add_option("--max-iter", sa.max_iter);
  sharp->add_option("--step-tol", sa.step_tol);
  sharp->add_option("--gap-tol", sa.gap_tol, "Largest acceptable gap");
  sharp->add_flag("--no-warm-start", sa.no_warm, "Use random starts only");

  ExtremalArgs ea;
  auto* ext = app.add_subcommand("extremal", "Build an extremal measure and check equality");
  add_common(ext, common_ext);
  ext->add_option("--case", ea.which, "caratheodory, t1-small, t1-large, t2 or t3");
  ext->add_option("--k", ea.k);
  ext->add_option("--n", ea.n);
  ext->add_option("--phi", ea.phi);
  ext->add_option("--theta", ea.theta);
  ext->add_option("--psi", ea.psi);
  ext->add_option("--c", ea.c);
  ext->add_option("--alpha", ea.alpha);
  ext->add_option("--masses", ea.masses, "Comma-separated simplex weights");
  ext->add_option("--masses-b", ea.masses_b, "Weights within the second arc set (t3)");
  ext->add_option("--w", ea.w, "Complex parameter, format a+bi");
  ext->add_option("--tol", ea.tol, "Classification tolerance");

  TableArgs ta;
  auto* table = app.add_subcommand("table", "CSV of bounds and searched maxima over the w grid");
  add_common(table, common_table);
  table->add_option("--max-k", ta.max_k);
  table->add_option("--k", ta.k);
  table->add_option("--n", ta.n);
  table->add_option("--restarts", ta.restarts);
  table->add_option("--gap-tol", ta.gap_tol);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(va, common_verify, out);
    if (sharp->parsed()) return cmd_sharpness(sa, common_sharp, out);
    if (ext->parsed()) return cmd_extremal(ea, common_ext, out);
    if (table->parsed()) return cmd_table(ta, common_table, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace pcoef
