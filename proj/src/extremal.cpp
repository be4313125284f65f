#include "pcoef/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "pcoef/functionals.hpp"

namespace pcoef {

namespace {

constexpr double kSupportTolerance = 1e-8;

double coset_phase(const HerglotzMeasure& mu, std::size_t m) {
  return reduce_angle(static_cast<double>(m) * mu.atoms().front().angle) / static_cast<double>(m);
}

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

}  // namespace

std::string to_string(EqualityTheorem t) {
  switch (t) {
    case EqualityTheorem::T_A: return "T_A";
    case EqualityTheorem::T1_lt: return "T1_lt";
    case EqualityTheorem::T1_gt: return "T1_gt";
    case EqualityTheorem::T1_eq_i: return "T1_eq_i";
    case EqualityTheorem::T1_eq_ii: return "T1_eq_ii";
    case EqualityTheorem::T2_lt: return "T2_lt";
    case EqualityTheorem::T2_point: return "T2_point";
  }
  return "unknown";
}

void to_json(nlohmann::json& j, const EqualityCase& e) {
  nlohmann::json params = nlohmann::json::object();
  const auto put = [&](const char* key, const std::optional<double>& v) {
    if (v) params[key] = *v;
  };
  put("phi", e.parameters.phi);
  put("theta", e.parameters.theta);
  put("psi", e.parameters.psi);
  put("c", e.parameters.c);
  put("phi_arc", e.parameters.phi_arc);
  put("mass_first", e.parameters.mass_first);
  j = nlohmann::json{{"theorem", to_string(e.theorem)}, {"parameters", std::move(params)}};
}

void to_json(nlohmann::json& j, const Classification& c) {
  if (const auto* e = std::get_if<EqualityCase>(&c)) {
    to_json(j, *e);
  } else {
    const auto& none = std::get<NoEquality>(c);
    j = nlohmann::json{{"theorem", "none"}, {"gap", none.gap}, {"bound_attained", none.bound_attained}};
  }
}

HerglotzMeasure extremal_caratheodory(std::size_t n, double phi, std::span<const double> masses) {
  return roots_of_unity_measure(n, phi, masses);
}

HerglotzMeasure extremal_T1_small_w(std::size_t k, std::size_t n, double c) {
  if (k < 1 || k >= n) fail("extremal_T1_small_w: requires 1 <= k <= n-1");
  return roots_of_unity_measure(n, c / static_cast<double>(n), uniform_masses(n));
}

HerglotzMeasure extremal_T1_large_w(std::size_t k, std::size_t n, double alpha,
                                    std::span<const double> masses) {
  if (k < 1 || k >= n) fail("extremal_T1_large_w: requires 1 <= k <= n-1");
  return coset_measure(std::gcd(k, n), alpha, masses);
}

HerglotzMeasure extremal_T2(std::size_t k, std::size_t n, double phi) {
  if (k < 1 || n < 1) fail("extremal_T2: requires k >= 1 and n >= 1");
  return roots_of_unity_measure(n + k, phi, uniform_masses(n + k));
}

double t3_mass_formula(double theta, double phi) {
  return 0.5 * (1.0 + std::sin(theta) / (1.0 + std::cos(theta)) * std::tan(phi));
}

T3Construction extremal_T3_detailed(const T3Params& in) {
  if (in.k < 1 || in.k >= in.n) fail("extremal_T3: requires 1 <= k <= n-1");
  if (!(std::abs(in.theta) < kPi)) fail("extremal_T3: requires |theta| < pi");
  if (!(std::abs(in.phi) <= kPi / 2 + 1e-12)) fail("extremal_T3: requires |phi| <= pi/2");

  const std::size_t n = in.n;
  const std::size_t k = std::min(in.k, n - in.k);
  const std::size_t rest = n - 2 * k;
  const double dk = static_cast<double>(k);
  const bool merged = std::abs(std::abs(in.phi) - kPi / 2) <= 1e-12;

  double M = 1.0;
  if (merged && std::abs(std::sin(in.theta)) > 1e-12)
    fail("extremal_T3: |phi| = pi/2 merges the arcs, which requires theta = 0");
  if (!merged) {
    M = t3_mass_formula(in.theta, in.phi);
    if (!(M >= -1e-12 && M <= 1.0 + 1e-12))
      fail("extremal_T3: mass formula gives M = " + std::to_string(M) + " outside [0, 1]");
    M = std::clamp(M, 0.0, 1.0);
  }

  const double psi = rest == 0 ? 0.0 : in.psi;
  const double shift = (in.c - psi) / (2.0 * dk);
  auto arc_set = [&](double beta) {
    std::vector<double> out;
    if (rest == 0) {
      for (std::size_t j = 0; j < k; ++j) out.push_back(beta + kTwoPi * static_cast<double>(j) / dk);
      return out;
    }
    const double dr = static_cast<double>(rest);
    for (std::size_t j = 0; j < rest; ++j) {
      const double cand = psi / dr + kTwoPi * static_cast<double>(j) / dr;
      if (angular_distance(dk * cand, dk * beta) < dk * kSupportTolerance) out.push_back(cand);
    }
    return out;
  };

  T3Construction out{HerglotzMeasure({{0.0, 1.0}}), k, {}, {}, M, 1.0 - M, merged};
  out.first_angles = arc_set(in.phi / dk + shift);
  if (!merged) out.second_angles = arc_set((kPi - in.phi) / dk + shift);

  const auto weights = [](const std::vector<double>& given, std::size_t size, double total,
                          const char* which) {
    if (total == 0.0 || size == 0) {
      if (total > 0.0)
        fail(std::string("extremal_T3: ") + which +
             " arc set (U_{n-2k} coset meet U_k coset) is empty for the given psi, phi, c");
      return std::vector<double>(size, 0.0);
    }
    std::vector<double> w = given.empty() ? uniform_masses(size) : given;
    require_simplex(w, size, which);
    for (auto& x : w) x *= total;
    return w;
  };
  const auto wa = weights(in.sub_masses_a, out.first_angles.size(), M, "first");
  const auto wb = weights(in.sub_masses_b, out.second_angles.size(), 1.0 - M, "second");

  std::vector<UnitAtom> atoms;
  for (std::size_t j = 0; j < wa.size(); ++j) atoms.push_back({out.first_angles[j], wa[j]});
  for (std::size_t j = 0; j < wb.size(); ++j) atoms.push_back({out.second_angles[j], wb[j]});
  out.measure = HerglotzMeasure(std::move(atoms));
  return out;
}

HerglotzMeasure extremal_T3(const T3Params& params) { return extremal_T3_detailed(params).measure; }

bool support_in_coset(const HerglotzMeasure& mu, std::size_t m, double tol) {
  const double dm = static_cast<double>(m);
  const double ref = dm * mu.atoms().front().angle;
  return std::all_of(mu.atoms().begin(), mu.atoms().end(),
                     [&](const UnitAtom& a) { return angular_distance(dm * a.angle, ref) < dm * tol; });
}

Classification classify_caratheodory(const HerglotzMeasure& mu, std::size_t n, double tol) {
  const double value = std::abs(coefficient(mu, n));
  if (std::abs(value - 2.0) > tol) return NoEquality{2.0 - value, false};
  if (support_in_coset(mu, n)) {
    EqualityParams params;
    params.phi = coset_phase(mu, n);
    return EqualityCase{EqualityTheorem::T_A, params};
  }
  return NoEquality{2.0 - value, true};
}

namespace {

// Two-arc structure on |1−2w| = 1 for the pair (k, n), 2k ≤ n.
std::optional<EqualityCase> match_two_arc(const HerglotzMeasure& mu, std::size_t k, std::size_t n,
                                          Complex w, Complex value, double tol) {
  const double c = std::arg(value);
  const double theta = std::arg(2.0 * w - 1.0);
  const HerglotzMeasure rot = mu.rotated(-c / static_cast<double>(n));
  const std::size_t rest = n - 2 * k;
  double t = 0.0;
  if (rest > 0) {
    if (!support_in_coset(rot, rest)) return std::nullopt;
    t = reduce_angle(static_cast<double>(rest) * rot.atoms().front().angle);
  }
  std::vector<Complex> u;
  for (const auto& a : rot.atoms()) u.push_back(std::polar(1.0, static_cast<double>(k) * a.angle + t / 2.0));
  const double height = u.front().imag();
  for (const auto& x : u)
    if (std::abs(x.imag() - height) > kSupportTolerance * static_cast<double>(k)) return std::nullopt;

  const double phi = std::asin(std::clamp(height, -1.0, 1.0));
  const Complex zeta = std::polar(1.0, phi);
  double M = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j)
    if (std::abs(u[j] - zeta) <= std::abs(u[j] + std::conj(zeta))) M += rot.atoms()[j].mass;

  const bool merged = std::cos(phi) <= kSupportTolerance;
  if (!merged && std::abs(M - t3_mass_formula(theta, phi)) > tol) return std::nullopt;

  EqualityParams params;
  params.theta = theta;
  params.phi_arc = phi;
  params.c = reduce_angle(c);
  params.psi = reduce_angle(t + c * (1.0 - 2.0 * static_cast<double>(k) / static_cast<double>(n)));
  params.mass_first = M;
  return EqualityCase{EqualityTheorem::T1_eq_ii, params};
}

}  // namespace

Classification classify_equality(const HerglotzMeasure& mu, std::size_t k, std::size_t n, Complex w,
                                 double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("classify_equality: tol must be positive");
  const CoeffSeries p = coefficients(mu, n);
  const Complex value = livingston(p, k, n, w);
  const double bound = bound_livingston(w);
  const double gap = bound - std::abs(value);
  if (std::abs(gap) > tol) return NoEquality{gap, false};

  const double r = regime(w);
  const bool on_circle = std::abs(r - 1.0) <= tol;

  if (std::abs(p[k]) <= tol && support_in_coset(mu, n) && r < 1.0 + tol) {
    EqualityParams params;
    params.phi = coset_phase(mu, n);
    params.c = reduce_angle(std::arg(value));
    return EqualityCase{on_circle ? EqualityTheorem::T1_eq_i : EqualityTheorem::T1_lt, params};
  }
  if (support_in_coset(mu, k) && support_in_coset(mu, n) && r > 1.0 - tol) {
    EqualityParams params;
    params.theta = coset_phase(mu, k);
    params.phi = coset_phase(mu, n);
    params.c = reduce_angle(std::arg(value));
    return EqualityCase{on_circle ? EqualityTheorem::T1_eq_ii : EqualityTheorem::T1_gt, params};
  }
  if (on_circle) {
    if (auto hit = match_two_arc(mu, std::min(k, n - k), n, w, value, tol)) return *hit;
  }
  return NoEquality{gap, true};
}

Classification classify_equality_A(const HerglotzMeasure& mu, std::size_t k, std::size_t n, Complex w,
                                   double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("classify_equality_A: tol must be positive");
  if (k == 0) return classify_caratheodory(mu, n, tol);
  const CoeffSeries p = coefficients(mu, n + k);
  const double value = std::abs(A_det(p, k, n, w));
  const double gap = bound_A(k, w) - value;
  if (std::abs(gap) > tol) return NoEquality{gap, false};

  const double r = regime(w);
  bool low_vanish = true;
  for (std::size_t j = 1; j <= k; ++j) low_vanish = low_vanish && std::abs(p[j]) <= tol;
  if (r < 1.0 + tol && low_vanish && support_in_coset(mu, n + k)) {
    EqualityParams params;
    params.phi = coset_phase(mu, n + k);
    return EqualityCase{EqualityTheorem::T2_lt, params};
  }
  if (r > 1.0 - tol && mu.size() == 1) {
    EqualityParams params;
    params.phi = mu.atoms().front().angle;
    return EqualityCase{EqualityTheorem::T2_point, params};
  }
  return NoEquality{gap, true};
}

}  // namespace pcoef
